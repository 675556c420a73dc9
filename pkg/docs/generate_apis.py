# -*- coding: utf-8 -*-

import importlib
import inspect
import os


def write(module_name, filename, header=None):
  if not os.path.exists(os.path.dirname(filename)):
    os.makedirs(os.path.dirname(filename))

  module = importlib.import_module(module_name)
  members = [k for k in getattr(module, '__all__', dir(module))
             if not k.startswith('_') and not inspect.ismodule(getattr(module, k))]
  classes = [k for k in members if inspect.isclass(getattr(module, k))]
  functions = [k for k in members if inspect.isfunction(getattr(module, k))]

  fout = open(filename, 'w')

  # write header
  if header is None:
    header = f'``{module_name}`` module'
  fout.write(header + '\n')
  fout.write('=' * len(header) + '\n\n')
  fout.write(f'.. currentmodule:: {module_name} \n')
  fout.write(f'.. automodule:: {module_name} \n\n')

  # write autosummary
  fout.write('.. autosummary::\n')
  fout.write('   :toctree: generated/\n\n')
  for m in classes + functions:
    fout.write(f'   {m}\n')

  # write autoclass / autofunction
  fout.write('\n')
  for m in classes:
    fout.write(f'.. autoclass:: {m}\n')
    fout.write(f'   :members:\n\n')
  for m in functions:
    fout.write(f'.. autofunction:: {m}\n\n')

  fout.close()


def generate():
  write(module_name='pconsistency.logic', filename='apis/logic.rst')
  write(module_name='pconsistency.sat', filename='apis/sat.rst')
  write(module_name='pconsistency.reasoning.kb', filename='apis/kb.rst', header='Knowledge bases')
  write(module_name='pconsistency.reasoning.consistency', filename='apis/consistency.rst',
        header='Consistency')
  write(module_name='pconsistency.reasoning.semantics', filename='apis/semantics.rst',
        header='Probability models')
  write(module_name='pconsistency.reasoning.entailment', filename='apis/entailment.rst',
        header='Entailment')
  write(module_name='pconsistency.session', filename='apis/session.rst', header='Session')
