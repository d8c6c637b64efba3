"""Shared fixtures: benchmark tables are expensive, so compute once."""

import pytest

from fracsub import harness

_table_cache = {}


def get_table(table_id):
    """Reports for one benchmark table, memoized across the session."""
    if table_id not in _table_cache:
        keys, reports = harness.run_table(table_id)
        _table_cache[table_id] = dict(zip(keys, reports))
    return _table_cache[table_id]


@pytest.fixture(scope="session")
def table_reports():
    return get_table
