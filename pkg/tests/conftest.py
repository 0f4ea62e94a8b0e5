import pytest

from varseq.core import NumberSet, Sequence


EXAMPLE_ONE = [1, 6, 2, 3, 4, 8, 7, 5]
EXAMPLE_ONE_IMAGE = [1, 6, 7, 8, 4, 3, 2, 5]
CTV_LOW = [9, 8, 5, 3, 2, 1, 4, 6, 7]
CTV_HIGH = [9, 8, 6, 4, 2, 1, 3, 5, 7]


@pytest.fixture
def example_one():
    return Sequence.from_values(EXAMPLE_ONE)


@pytest.fixture
def one_to_eight():
    return NumberSet(tuple(range(1, 9)))


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write


@pytest.fixture
def empty_config(write_file):
    return write_file('config.yml', '')
