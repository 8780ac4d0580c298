from __future__ import annotations

import pytest

from fmeakit import bundled_csv_bytes, microgrid_worksheet


@pytest.fixture()
def fixture_ws():
    """The bundled 15-entry microgrid worksheet."""
    return microgrid_worksheet()


@pytest.fixture()
def fixture_csv(tmp_path):
    """The bundled worksheet written out as a .csv file path."""
    path = tmp_path / "microgrid.csv"
    path.write_bytes(bundled_csv_bytes())
    return path
