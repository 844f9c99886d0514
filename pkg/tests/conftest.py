import pathlib

import pytest

from germinv import image_equation
from germinv.germfile import load_germ_file

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def corpus_path(name: str) -> str:
    return str(CORPUS / f"{name}.germ")


def load(name: str):
    return load_germ_file(corpus_path(name))


def _image(name: str):
    gf = load(name)
    return image_equation(gf.spec, gf.config())


# The image-equation objects memoize their field bases and cleaned
# generating sets, so sharing one per corpus germ across the whole session
# keeps the expensive work (kernel/tangent syzygies on exam1) single-shot.

@pytest.fixture(scope="session")
def crosscap_image():
    return _image("crosscap")


@pytest.fixture(scope="session")
def twoplane_image():
    return _image("twoplane")


@pytest.fixture(scope="session")
def s1_image():
    return _image("s1")


@pytest.fixture(scope="session")
def exam1_image():
    return _image("exam1")
