# -*- coding: utf-8 -*-

import pytest

from pconsistency.reasoning import KnowledgeBase
from pconsistency.session import Session

from .corpus import (GOLDEN, NIXON_MIXED, NIXON_STRICT_MEMBERSHIP, NIXON_STRICT_PACIFISM,
                     PENGUINS, PENGUINS_STRICT)


@pytest.fixture
def session():
  return Session()


@pytest.fixture
def penguins_strict():
  return KnowledgeBase.from_text(PENGUINS_STRICT)


@pytest.fixture
def penguins():
  return KnowledgeBase.from_text(PENGUINS)


@pytest.fixture
def nixon_strict_pacifism():
  return KnowledgeBase.from_text(NIXON_STRICT_PACIFISM)


@pytest.fixture
def nixon_strict_membership():
  return KnowledgeBase.from_text(NIXON_STRICT_MEMBERSHIP)


@pytest.fixture
def nixon_mixed():
  return KnowledgeBase.from_text(NIXON_MIXED)


@pytest.fixture
def kb_file(tmp_path):
  def write(name):
    path = tmp_path / f'{name}.kb'
    path.write_text(GOLDEN[name], encoding='utf-8')
    return str(path)
  return write
