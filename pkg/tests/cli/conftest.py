"""Shared fixtures for CLI command tests."""

import pytest


@pytest.fixture
def suite_file(tmp_path):
    path = tmp_path / "smoke.yaml"
    path.write_text(
        "name: smoke\n"
        "defaults:\n"
        "  max_height: 2\n"
        "  length_bound: 3\n"
        "entries:\n"
        "  - lemma_id: commute\n"
        "    cells:\n"
        "      - datum: A1\n"
        "  - lemma_id: commute!neg\n"
        "    expect: counterexamples\n"
        "    cells:\n"
        "      - datum: A1\n"
    )
    return path


@pytest.fixture
def failing_suite_file(tmp_path):
    path = tmp_path / "failing.yaml"
    path.write_text(
        "entries:\n"
        "  - lemma_id: commute!neg\n"
        "    overrides:\n"
        "      max_height: 2\n"
        "      length_bound: 3\n"
        "    cells:\n"
        "      - datum: A1\n"
    )
    return path
