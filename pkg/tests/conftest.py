import pytest

from corpora import FIXTURE_QUERY, build_fixture_docs
from topicgraph import Query, build_index, execute_query


@pytest.fixture(scope="session")
def fixture_docs():
    return build_fixture_docs()


@pytest.fixture(scope="session")
def fixture_index(fixture_docs):
    return build_index(fixture_docs)


@pytest.fixture(scope="session")
def fixture_rs(fixture_index):
    return execute_query(fixture_index, Query.from_text(FIXTURE_QUERY, fixture_index))
