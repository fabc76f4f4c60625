"""Shared plumbing for the solve / oracle / bench command-line scripts."""
import os
import sys
import json
import time
import argparse
from typing import Dict, List, Optional

from pydantic import BaseModel
from data_store import logToConsole, logToStderr, logNothing, sanitize, runKey
from graph_model import buildMaxcutCost, buildCommunityCost, buildImageCost, objective, cutValue, recoveryRate, recoveryRounds
from instances import SBMSpec, sbmGenerate, loadRudyFile, loadImage
from rounding import signRound, leadingPartition, factorFromRect, randomizedRound, defaultTrials
from vector_admm import VectorConfig, solveVector
from matrix_admm import MatrixConfig, rankFor, solveMatrix

methodNames = {'v': 'V', 'mr1': 'MR1', 'mrr': 'MRR'}
logLevels = ['critical', 'error', 'warning', 'info', 'debug']
# Levels at which solver progress is shown
parseLevels = ['info', 'debug']
exitCodes = {'converged': 0, 'max_iter': 2}
inputErrorCode = 1
dbDirVariable = 'ADMMCUT_DB_DIR'

class InputError(ValueError):
    pass

# Format, cap, config and numerics errors all derive from these; they end a
# script with the input-error exit code
inputErrors = (ValueError, ArithmeticError, OSError)

class CliParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags, which collides with max_iter."""
    def error(self, message):
        raise InputError(message)

def warningsOnly(value, end='\n'):
    if value.startswith('WARNING:'):
        logToStderr(value, end)

def makeLog(level):
    if level not in logLevels:
        raise InputError('log_level must be one of: %s' % ', '.join(logLevels))
    if level in parseLevels:
        return logToStderr
    if level == 'warning':
        return warningsOnly
    return logNothing

def reportError(err):
    sys.stderr.write('ERROR: %s\n' % err)
    sys.stderr.flush()
    return inputErrorCode

def addCommonArguments(parser):
    parser.add_argument('-d', '--db_dir', dest='dbDir', default=os.environ.get(dbDirVariable),
                        help=('Directory of the run store; runs are only stored when this (or %s) '
                              'is set. Will override %s if specified.' % (dbDirVariable, dbDirVariable)))
    parser.add_argument('-l', '--log_level', dest='logLevel', default='warning',
                        help=('One of: %s (default: warning); info and debug also display '
                              'solver progress' % ', '.join(logLevels)))

def addInstanceArguments(parser):
    parser.add_argument('-i', '--input', dest='input', type=str, metavar='path',
                        help='Graph in rudy format ("n m" header, then "i j w" lines)')
    parser.add_argument('--sbm', dest='sbm', type=str, metavar='n,m,p,q',
                        help='Generate a two-community stochastic block model instance')
    parser.add_argument('--image', dest='image', type=str, metavar='path',
                        help='PGM / PPM image to segment (one node per pixel)')
    parser.add_argument('--cost', dest='cost', choices=['maxcut', 'community'], default=None,
                        help='Cost matrix to build (default: community for --sbm, maxcut otherwise)')
    parser.add_argument('--pq', dest='pq', type=str, metavar='p,q',
                        help='Edge probabilities for --cost community with --input (default: taken from --sbm)')
    parser.add_argument('--c', dest='c', type=float, default=1.0,
                        help='Color vs position weight for --image (default: 1.0)')
    parser.add_argument('--seed', dest='seed', type=int, default=0,
                        help='Seed for instance generation, initialization and rounding (default: 0)')

class Instance:
    """A cost matrix plus whatever the run can be scored against."""
    def __init__(self, instanceId, cost, graph=None, truth=None, image=None):
        self.instanceId = instanceId
        self.cost = cost
        self.graph = graph
        self.truth = truth
        self.image = image

    @property
    def n(self):
        return self.cost.n

    def cutOf(self, partition):
        if self.cost.kind != 'maxcut':
            return None
        if self.graph is not None:
            return cutValue(self.graph, partition)
        # Image costs skip the 1/4 scale
        return -objective(self.cost, partition) / 4.0

def _parsePair(text):
    parts = text.split(',')
    if len(parts) != 2:
        raise InputError('Expected p,q but got: %s' % text)
    return float(parts[0]), float(parts[1])

def _stem(path):
    return os.path.splitext(os.path.basename(path))[0]

def loadInstance(inputPath=None, sbm=None, image=None, cost=None, pq=None, c=1.0, seed=0,
                 instanceId=None, log=logToConsole):
    sources = [s for s in (inputPath, sbm, image) if s is not None]
    if len(sources) != 1:
        raise InputError('Exactly one of --input, --sbm or --image is required')
    if inputPath is not None or image is not None:
        path = inputPath if inputPath is not None else image
        if not os.path.isfile(path):
            raise InputError('Input file not found: %s' % path)

    if image is not None:
        features = loadImage(image, c=c)
        costMatrix = buildImageCost(features, mode=cost or 'maxcut')
        return Instance(instanceId or _stem(image), costMatrix, image=features)

    if sbm is not None:
        spec = SBMSpec.fromString(sbm, seed=seed)
        graph, truth = sbmGenerate(spec)
        log('Generated %s: %d edges, total weight %g' % (sbm, graph.numEdges, graph.totalWeight()))
        kind = cost or 'community'
        if kind == 'maxcut':
            log('WARNING: --sbm with --cost maxcut looks for the max cut, not the planted communities')
            costMatrix = buildMaxcutCost(graph)
        else:
            costMatrix = buildCommunityCost(graph, spec.p, spec.q, log=log)
        defaultId = 'sbm-%d-%d-%g-%g-s%d' % (spec.n, spec.m, spec.p, spec.q, spec.seed)
        return Instance(instanceId or defaultId, costMatrix, graph=graph, truth=truth)

    graph = loadRudyFile(inputPath)
    log('Loaded %s: %d nodes, %d edges, total weight %g' % (inputPath, graph.n, graph.numEdges, graph.totalWeight()))
    if cost == 'community':
        if pq is None:
            raise InputError('--cost community with --input needs --pq p,q')
        p, q = _parsePair(pq)
        costMatrix = buildCommunityCost(graph, p, q, log=log)
    else:
        costMatrix = buildMaxcutCost(graph)
    return Instance(instanceId or _stem(inputPath), costMatrix, graph=graph)

class RunSummary(BaseModel):
    method: str
    instanceId: str
    n: int
    r: int
    status: str
    iterations: int
    wallTime: float
    timings: Dict[str, float]
    objective: float
    bestRoundedObjective: float
    cutValue: Optional[float] = None
    recovery: Optional[float] = None
    recovered: Optional[bool] = None
    residuals: Dict[str, float]
    seed: int
    trials: Optional[int] = None
    config: dict
    flags: dict = {}
    partition: List[int]

    def stopResidual(self):
        return max(self.residuals.values())

    def toJson(self):
        return json.dumps(sanitize(self.model_dump()), sort_keys=True, indent=2)

    def storeKey(self):
        return runKey(self.instanceId, self.method, self.seed, dict(self.config, trials=self.trials))

def buildConfig(method, options):
    """options: rho0, alpha, eps, maxIter, seed, schedule, enforceTheorem1 (None = default)."""
    fields = {key: value for key, value in options.items() if value is not None}
    if method == 'v':
        fields = {key: value for key, value in fields.items() if key in VectorConfig.model_fields}
        return VectorConfig(**fields)
    if method not in methodNames:
        raise InputError('Unknown method: %s (expected one of: %s)' % (method, ', '.join(methodNames)))
    fields = {key: value for key, value in fields.items() if key in MatrixConfig.model_fields}
    return MatrixConfig(rMode='one' if method == 'mr1' else 'full', **fields)

def _recoveryMonitor(truth, rounder):
    if truth is None:
        return None
    return lambda state: {'recovery': recoveryRate(rounder(state), truth)}

def runPipeline(instance, method, cfg, trials=defaultTrials, log=logToConsole):
    """Solve, round and score one instance; returns (RunSummary, RunTrace)."""
    start = time.perf_counter()
    cost = instance.cost
    if method == 'v':
        monitor = _recoveryMonitor(instance.truth, lambda state: signRound(state.x))
        state, trace = solveVector(cost, cfg, log=log, onIteration=monitor)
        roundingStart = time.perf_counter()
        partition = signRound(state.x)
        r = 1
        last = trace.last()
        residuals = {'primal': last['primalResidual'], 'dualIdentity': last['dualResidual']}
    else:
        monitor = _recoveryMonitor(instance.truth, lambda state: leadingPartition(state.X))
        state, trace = solveMatrix(cost, cfg, log=log, onIteration=monitor)
        roundingStart = time.perf_counter()
        r = rankFor(cost.n, cfg.rMode)
        if method == 'mr1':
            partition = signRound(state.X[:, 0])
        else:
            partition = randomizedRound(factorFromRect(state.X), cost, trials=trials, seed=cfg.seed)
        last = trace.last()
        residuals = {'feasibilityXY': last['feasibilityXY'], 'feasibilityZ': last['feasibilityZ']}
    trace.timings['rounding'] = time.perf_counter() - roundingStart
    recovery = None if instance.truth is None else recoveryRate(partition, instance.truth)

    summary = RunSummary(method=methodNames[method],
                         instanceId=instance.instanceId,
                         n=cost.n,
                         r=r,
                         status=trace.status,
                         iterations=len(trace),
                         wallTime=time.perf_counter() - start,
                         timings=trace.timings,
                         objective=objective(cost, partition),
                         bestRoundedObjective=last['bestRoundedObjective'],
                         cutValue=instance.cutOf(partition),
                         recovery=recovery,
                         recovered=None if recovery is None else recoveryRounds(recovery),
                         residuals=residuals,
                         seed=cfg.seed,
                         trials=trials if method == 'mrr' else None,
                         config=cfg.model_dump(),
                         flags=trace.flags,
                         partition=partition.tolist())
    log('%s on %s: objective %g%s%s (%s after %d iterations)' % (
        summary.method, summary.instanceId, summary.objective,
        '' if summary.cutValue is None else ', cut %g' % summary.cutValue,
        '' if summary.recovery is None else ', recovery %.3f' % summary.recovery,
        summary.status, summary.iterations))
    return summary, trace
