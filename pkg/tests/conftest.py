import functools
import random

import pytest
from hypothesis import strategies as st

from monofg.corpus import CorpusConfig, _random_algebra, generate_corpus
from monofg.errors import InfiniteDimensional, InvalidAlgebra, ResourceBound
from monofg.anick import right_chains
from monofg.named import all_named


@functools.lru_cache(maxsize=None)
def corpus():
    return tuple(generate_corpus(CorpusConfig()))


@functools.lru_cache(maxsize=None)
def named():
    return tuple(all_named())


@pytest.fixture(scope="session")
def corpus_algebras():
    return corpus()


@pytest.fixture(scope="session")
def named_algebras():
    return named()


def _draw_algebra(seed: int):
    """First algebra the corpus sampler accepts from this seed (None if it gives up)."""
    rng = random.Random(seed)
    cfg = CorpusConfig(max_dim=40, chain_degree=8, max_chains=1500)
    for _ in range(200):
        try:
            alg = _random_algebra(rng, cfg, f"h{seed}")
        except (InvalidAlgebra, InfiniteDimensional):
            continue
        if len(alg.nonzero_basis()) > cfg.max_dim:
            continue
        try:
            right_chains(alg, cfg.chain_degree, max_chains=cfg.max_chains)
        except ResourceBound:
            continue
        return alg
    return None


random_algebras = st.integers(min_value=0, max_value=10**9).map(_draw_algebra).filter(lambda a: a is not None)
