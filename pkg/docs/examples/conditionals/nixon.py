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
# # Quakers and republicans

# %% [markdown]
# Three versions of the same story about a Nixonite `n` who is a
# quaker `q` and a republican `r`, and whether they are a pacifist `p`.

# %%
import pconsistency as pc

# %% [markdown]
# With strict rules about pacifism the knowledge base is inconsistent.
# The last sentence is tolerated by all the others, so the minimal core is
# formed by the first four.

# %%
pacifism = pc.KnowledgeBase.from_text("""
n -> r
n -> q
q => p
r => ~p
p -> c
""")
verdict = pc.check_consistency(pacifism)
verdict, pc.minimize_core(pacifism, verdict.core)

# %% [markdown]
# With strict membership and defeasible pacifism the knowledge base is
# consistent, and whether a Nixonite is a pacifist stays open.

# %%
membership = pc.KnowledgeBase.from_text("""
n => r
n => q
q -> p
r -> ~p
p -> c
""")
(pc.p_entails(membership, pc.parse_conditional('n -> p')).status,
 pc.p_entails(membership, pc.parse_conditional('n -> ~p')).status)

# %% [markdown]
# Making only "all Nixonites are quakers" and "all republicans are
# non-pacifists" strict settles the question.

# %%
mixed = pc.KnowledgeBase.from_text("""
n -> r
n => q
q -> p
r => ~p
p -> c
""")
pc.p_entails(mixed, pc.parse_conditional('n -> ~p')).status
