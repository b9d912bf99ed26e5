import pytest

from hgpoly import corpus, pba


@pytest.fixture(scope="session")
def named():
    return corpus.named_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return corpus.small_corpus()


@pytest.fixture(scope="session")
def pba2():
    return pba.pba_setup(2)


@pytest.fixture(scope="session")
def pba3():
    return pba.pba_setup(3)
