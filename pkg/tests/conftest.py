import numpy as np
import pytest

from dak import build_concat
from dak.bench import warmup


def random_docs(rng, sigma, d, total):
    """``d`` documents over ``sigma`` symbols with about ``total`` body bytes."""
    symbols = rng.choice(np.arange(2, 256), size=sigma, replace=False).astype(np.uint8)
    body = symbols[rng.integers(0, sigma, size=total)]
    cuts = np.sort(rng.integers(0, total + 1, size=d - 1))
    return [part.tobytes() for part in np.split(body, cuts)]


def random_collection(rng, sigma=None, d=None, max_total=5000):
    sigma = sigma or int(rng.choice([2, 4, 26, 200]))
    d = d or int(rng.integers(1, 65))
    total = int(rng.integers(0, max_total - d))
    return build_concat(random_docs(rng, sigma, d, total))


def owner_oracle(ct):
    """Document of every text position by a left-to-right scan (0-based list)."""
    owner, doc = [], 1
    for c in ct.data.tolist():
        owner.append(doc)
        if c == 1:
            doc += 1
    owner[-1] = ct.d + 1
    return owner


def da_oracle(ct, sa):
    owner = owner_oracle(ct)
    return [owner[p - 1] for p in sa.tolist()]


def toy_sort(text):
    """Suffix array of a str using '#' < '$1' < '$2' < ... < letters, by brute force."""
    keys, doc = [], 0
    for ch in text:
        if ch == "#":
            keys.append((0, 0))
        elif ch == "$":
            doc += 1
            keys.append((1, doc))
        else:
            keys.append((2, ord(ch)))
    return sorted(range(1, len(text) + 1), key=lambda p: keys[p - 1:])


@pytest.fixture(scope="session", autouse=True)
def _compiled():
    warmup()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def toy():
    return build_concat([b"ab", b"a"])


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
