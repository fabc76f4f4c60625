import os

import numpy as np
import pytest
from conftest import randomGraph
from data_store import logNothing
from graph_model import buildMaxcutCost, objective, cutValue, recoveryRounds
from instances import bruteForce, randomBaseline, loadRudyFile
from rounding import signRound, leadingPartition, factorFromRect, randomizedRound
from vector_admm import VectorConfig, solveVector
from matrix_admm import MatrixConfig, solveMatrix
from cli import Instance, buildConfig, loadInstance, runPipeline

pytestmark = pytest.mark.acceptance

dimacsDir = os.environ.get('ADMMCUT_DIMACS_DIR')

def dimacsGraph(name):
    if not dimacsDir:
        pytest.skip('ADMMCUT_DIMACS_DIR is not set')
    path = os.path.join(dimacsDir, name)
    if not os.path.isfile(path):
        pytest.skip('%s not found' % name)
    return loadRudyFile(path)

@pytest.mark.parametrize('method, maxIter', [('v', 50), ('mr1', 10), ('mrr', 10)])
def test_sbmRecovery(method, maxIter):
    exact = 0
    for seed in range(10):
        instance = loadInstance(sbm='1000,500,0.1,0.01', seed=seed, log=logNothing)
        cfg = buildConfig(method, {'maxIter': maxIter, 'seed': seed})
        summary, _ = runPipeline(instance, method, cfg, log=logNothing)
        exact += recoveryRounds(summary.recovery)
    assert exact >= 9

def test_oracleConsistency():
    vectorHits = matrixHits = 0
    ratios = []
    for seed in range(50):
        graph = randomGraph(10, density=0.5, seed=1000 + seed)
        cost = buildMaxcutCost(graph)
        _, optimum = bruteForce(cost)

        state, _ = solveVector(cost, VectorConfig(seed=seed), log=logNothing)
        value = objective(cost, signRound(state.x))
        assert value >= optimum - 1e-12
        vectorHits += np.isclose(value, optimum)

        state, _ = solveMatrix(cost, MatrixConfig(rMode='one', seed=seed), log=logNothing)
        value = objective(cost, leadingPartition(state.X))
        assert value >= optimum - 1e-12
        matrixHits += np.isclose(value, optimum)

        state, _ = solveMatrix(cost, MatrixConfig(seed=seed), log=logNothing)
        rounded = randomizedRound(factorFromRect(state.X), cost, trials=10, seed=seed)
        if optimum < 0:
            ratios.append(cutValue(graph, rounded) / -optimum)
    assert vectorHits >= 30
    assert matrixHits >= 30
    assert np.mean(ratios) >= 0.87

def test_pm3850():
    graph = dimacsGraph('pm3-8-50.rudy')
    assert (graph.n, graph.numEdges) == (512, 3072)
    instance = Instance('pm3-8-50', buildMaxcutCost(graph), graph=graph)
    baseline, _ = randomBaseline(instance.cost, draws=1000, seed=0)
    baselineCut = cutValue(graph, baseline)
    cuts = {}
    for method in ['v', 'mr1']:
        summary, _ = runPipeline(instance, method, buildConfig(method, {}), log=logNothing)
        cuts[method] = summary.cutValue
    assert cuts['v'] >= 295
    assert cuts['mr1'] >= 280
    assert min(cuts.values()) > 3 * baselineCut

def test_g38():
    graph = dimacsGraph('g3-8.rudy')
    instance = Instance('g3-8', buildMaxcutCost(graph), graph=graph)
    summary, _ = runPipeline(instance, 'mr1', buildConfig('mr1', {}), log=logNothing)
    assert summary.cutValue >= 0.85 * 36780180
