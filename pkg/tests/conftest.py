import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

import engineers_case as case  # noqa: E402

from fnnmadm import make_decision_matrix, make_fnnn  # noqa: E402

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent
ENGINEERS_CSV = REPO_ROOT / "demos" / "engineers.csv"


@pytest.fixture(scope="session")
def engineers_matrix():
    cells = [[make_fnnn(*c) for c in row] for row in case.RAW_CELLS]
    return make_decision_matrix(
        case.ALTERNATIVES, case.ATTRIBUTES, cells, case.WEIGHTS
    )


@pytest.fixture(scope="session")
def engineers_csv_path():
    assert ENGINEERS_CSV.is_file()
    return str(ENGINEERS_CSV)
