import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypergroups import fixtures as fx


@pytest.fixture(scope="session")
def corpus():
    return fx.corpus()


@pytest.fixture(scope="session")
def groups():
    return fx.group_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Members with rank at most 8, where exhaustive tuple scans are cheap."""
    return {name: h for name, h in corpus.items() if h.rank <= 8}


@pytest.fixture(scope="session")
def fixtures_dir():
    return Path(__file__).parent.parent / "fixtures"
