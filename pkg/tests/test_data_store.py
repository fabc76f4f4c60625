import math

import numpy as np
import pytest
from data_store import RunStore, runKey, sanitize
from vector_admm import RunTrace

@pytest.fixture
def store(tmp_path):
    runStore = RunStore(str(tmp_path / 'runs'))
    yield runStore
    runStore.close()

def test_sanitize():
    cleaned = sanitize({'a': float('inf'), 'b': [1.0, float('nan')], 'c': (2, 'x')})
    assert cleaned == {'a': 'inf', 'b': [1.0, 'nan'], 'c': [2, 'x']}
    cleaned = sanitize({'a': np.bool_(True), 'b': np.float64(1.5), 'c': np.float64('inf'), 'd': np.int64(3)})
    assert cleaned == {'a': True, 'b': 1.5, 'c': 'inf', 'd': 3}
    assert type(cleaned['a']) is bool

def test_runKeyIsStable():
    first = runKey('k2', 'V', 0, {'alpha': 1.05, 'eps': 1e-6})
    assert first == runKey('k2', 'V', 0, {'eps': 1e-6, 'alpha': 1.05})
    assert first != runKey('k2', 'V', 1, {'alpha': 1.05, 'eps': 1e-6})
    assert first != runKey('k2', 'MR1', 0, {'alpha': 1.05, 'eps': 1e-6})

def test_addFindAndDelete(store):
    store.addRun('a', {'instanceId': 'k2', 'method': 'V', 'objective': -0.5}, [{'k': 1, 'rho': math.inf}])
    store.addRun('b', {'instanceId': 'k2', 'method': 'MR1', 'objective': -0.5})
    store.addRun('c', {'instanceId': 'tri', 'method': 'V', 'objective': -2.0})
    assert len(store) == 3
    assert 'a' in store and store['a']['method'] == 'V'
    assert store.getTrace('a') == [{'k': 1, 'rho': 'inf'}]
    assert store.getTrace('b') is None
    assert [run['method'] for run in store.findRuns(instanceId='k2')] == ['V', 'MR1']
    assert [run['instanceId'] for run in store.findRuns(method='V', instanceId='tri')] == ['tri']
    del store['a']
    assert 'a' not in store
    assert store.getTrace('a') is None
    assert len(store) == 2

def test_storePersists(tmp_path):
    dbDir = str(tmp_path / 'persist')
    first = RunStore(dbDir)
    first.addRun('x', {'instanceId': 'g', 'method': 'V'})
    first.close()
    second = RunStore(dbDir)
    assert second['x'] == {'instanceId': 'g', 'method': 'V'}
    second.purge()

def test_runTrace(tmp_path):
    trace = RunTrace(maxIter=3)
    trace.addRecord(k=1, objective=2.0)
    trace.addRecord(k=2, objective=float('nan'))
    trace.finish('max_iter')
    assert len(trace) == 2
    assert list(trace.column('k')) == [1, 2]
    assert trace.last()['k'] == 2
    path = tmp_path / 'trace.jsonl'
    trace.writeJsonLines(str(path))
    lines = path.read_text(encoding='utf-8').splitlines()
    assert lines == ['{"k": 1, "objective": 2.0}', '{"k": 2, "objective": "nan"}']
    with pytest.raises(AssertionError):
        trace.finish('diverged')
