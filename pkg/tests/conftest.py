from pathlib import Path

import pytest

from mapumorph import default_lexicon, default_rules

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def rules():
    return default_rules()


def load_gloss_corpus():
    """(word, printed gloss, source) rows of the attested-form corpus."""
    rows = []
    for line in (DATA / "gloss_corpus.tsv").read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        word, gloss, source = line.split("\t")
        rows.append((word, gloss, source))
    return rows


@pytest.fixture(scope="session")
def gloss_corpus():
    return load_gloss_corpus()
