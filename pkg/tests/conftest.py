import pathlib

import pytest

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--bless", action="store_true", default=False,
                     help="regenerate golden files instead of comparing")


@pytest.fixture
def golden(request):
    """Compare text against a stored golden file, or rewrite it under --bless."""

    bless = request.config.getoption("--bless")

    def check(name: str, text: str):
        path = GOLDEN_DIR / name
        if bless:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            return
        assert path.exists(), f"golden file {name} missing; run pytest --bless"
        assert text == path.read_text(encoding="utf-8"), f"golden mismatch for {name}"

    return check
