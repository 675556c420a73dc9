# ---
# jupyter:
#   jupytext:
#     formats: ipynb,py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#       jupytext_version: 1.11.4
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Penguins: exceptions and inconsistency

# %% [markdown]
# Birds fly and penguins are birds that do not fly. Stated with a strict
# rule for the birds, the three sentences cannot hold together.

# %%
import pconsistency as pc

# %%
strict = pc.KnowledgeBase.from_text("""
b => f
p -> b
p -> ~f
""")

verdict = pc.check_consistency(strict)
verdict, pc.minimize_core(strict, verdict.core)

# %% [markdown]
# Softening the first rule to "typically, birds fly" restores consistency.
# The first sentence is tolerated through the assignment $b = f = 1, p = 0$.

# %%
penguins = pc.KnowledgeBase.from_text("""
b -> f
p -> b
p -> ~f
""")

verdict = pc.check_consistency(penguins)
verdict.removals

# %% [markdown]
# The certificate gives a probability model for every $\varepsilon$.

# %%
model = pc.build_witness_model(verdict, '1/10')
for t, w in model:
    print(w, dict(t))
pc.probabilities(model, penguins)

# %% [markdown]
# Penguin birds typically do not fly, and adding "birds are typically
# penguins" breaks the knowledge base again.

# %%
pc.p_entails(penguins, pc.parse_conditional('p & b -> ~f'))

# %%
grown, _ = penguins.add(pc.parse_conditional('b -> p'))
pc.check_consistency(grown)
