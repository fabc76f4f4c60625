import os
import sys
import csv
import json
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, field_validator
from data_store import RunStore, logNothing, runKey
from instances import randomBaseline
from rounding import defaultTrials
from . import (CliParser, RunSummary, addCommonArguments, buildConfig, inputErrors, loadInstance,
               makeLog, methodNames, parseLevels, reportError, runPipeline)

baselineDraws = 1000
csvColumns = ['instanceId', 'method', 'seed', 'n', 'r', 'status', 'iterations', 'objective', 'cutValue',
              'recovery', 'recovered', 'bestRoundedObjective', 'stopResidual', 'baselineObjective', 'baselineCutValue',
              'bestObjective', 'bestCutValue', 'wallTime', 'fromStore']

class ManifestInstance(BaseModel):
    model_config = ConfigDict(extra='forbid')

    id: Optional[str] = None
    path: Optional[str] = None
    sbm: Optional[str] = None
    image: Optional[str] = None
    cost: Optional[str] = None
    pq: Optional[str] = None
    c: float = 1.0
    # Seed for generating the instance itself; solver seeds come from `seeds`
    instanceSeed: int = 0
    seeds: Optional[List[int]] = None
    config: Dict[str, dict] = {}

class BenchManifest(BaseModel):
    model_config = ConfigDict(extra='forbid')

    instances: List[ManifestInstance]
    methods: List[str] = list(methodNames)
    seeds: List[int] = [0]
    # Per-method overrides, e.g. {"v": {"maxIter": 50}}
    config: Dict[str, dict] = {}
    trials: int = defaultTrials
    draws: int = baselineDraws

    @field_validator('methods')
    @classmethod
    def knownMethods(cls, value):
        unknown = [method for method in value if method not in methodNames]
        if unknown:
            raise ValueError('Unknown methods: %s' % ', '.join(unknown))
        return value

    @classmethod
    def load(cls, path):
        with open(path, 'r', encoding='utf-8') as manifestFile:
            manifest = cls.model_validate(json.load(manifestFile))
        # Instance paths are relative to the manifest
        root = os.path.dirname(os.path.abspath(path))
        for entry in manifest.instances:
            for field in ['path', 'image']:
                value = getattr(entry, field)
                if value is not None and not os.path.isabs(value):
                    setattr(entry, field, os.path.join(root, value))
        return manifest

def pipelineKey(instanceId, method, cfg, trials):
    return runKey(instanceId, methodNames[method], cfg.seed,
                  dict(cfg.model_dump(), trials=trials if method == 'mrr' else None))

def planJobs(manifest, log=logNothing):
    """Load every instance once and list (instance, method, cfg) jobs in manifest order."""
    jobs = []
    baselines = {}
    for entry in manifest.instances:
        instance = loadInstance(inputPath=entry.path, sbm=entry.sbm, image=entry.image, cost=entry.cost,
                                pq=entry.pq, c=entry.c, seed=entry.instanceSeed, instanceId=entry.id, log=log)
        partition, value = randomBaseline(instance.cost, draws=manifest.draws, seed=entry.instanceSeed)
        baselines[instance.instanceId] = (value, instance.cutOf(partition))
        for method in manifest.methods:
            overrides = dict(manifest.config.get(method, {}))
            overrides.update(entry.config.get(method, {}))
            for seed in (entry.seeds if entry.seeds is not None else manifest.seeds):
                jobs.append((instance, method, buildConfig(method, dict(overrides, seed=seed))))
    return jobs, baselines

def runJobs(jobs, trials, workers=1, store=None, log=logNothing, solverLog=logNothing):
    def runJob(job):
        instance, method, cfg = job
        key = pipelineKey(instance.instanceId, method, cfg, trials)
        if store is not None and key in store:
            log('Reusing stored %s run on %s (seed %d)' % (methodNames[method], instance.instanceId, cfg.seed))
            return RunSummary.model_validate(store[key]), True
        summary, trace = runPipeline(instance, method, cfg, trials=trials, log=solverLog)
        if store is not None:
            store.addRun(key, summary.model_dump(), trace.records)
        log('Finished %s on %s (seed %d): %s' % (summary.method, summary.instanceId, summary.seed, summary.status))
        return summary, False

    # map() keeps manifest order regardless of which worker finishes first
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(runJob, jobs))

def tabulate(results, baselines):
    bestObjective = {}
    bestCut = {}
    for summary, _ in results:
        group = (summary.instanceId, summary.method)
        bestObjective[group] = min(bestObjective.get(group, float('inf')), summary.objective)
        if summary.cutValue is not None:
            bestCut[group] = max(bestCut.get(group, float('-inf')), summary.cutValue)
    rows = []
    for summary, fromStore in results:
        group = (summary.instanceId, summary.method)
        baselineObjective, baselineCut = baselines[summary.instanceId]
        rows.append({
            'instanceId': summary.instanceId,
            'method': summary.method,
            'seed': summary.seed,
            'n': summary.n,
            'r': summary.r,
            'status': summary.status,
            'iterations': summary.iterations,
            'objective': summary.objective,
            'cutValue': summary.cutValue,
            'recovery': summary.recovery,
            'recovered': summary.recovered,
            'bestRoundedObjective': summary.bestRoundedObjective,
            'stopResidual': summary.stopResidual(),
            'baselineObjective': baselineObjective,
            'baselineCutValue': baselineCut,
            'bestObjective': bestObjective[group],
            'bestCutValue': bestCut.get(group),
            'wallTime': summary.wallTime,
            'fromStore': fromStore
        })
    return rows

def writeCsv(rows, outFile):
    writer = csv.DictWriter(outFile, fieldnames=csvColumns, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow({key: '' if value is None else value for key, value in row.items()})

def buildParser():
    parser = CliParser(description='Run every (instance, method, seed) in a JSON manifest and tabulate the results')
    parser.add_argument('-m', '--manifest', dest='manifest', type=str, metavar='path.json', required=True,
                        help='JSON manifest with instances, methods, seeds and per-method config overrides')
    parser.add_argument('-o', '--out', dest='out', type=str, metavar='path.csv',
                        help='Write the CSV table (default: print it to stdout)')
    parser.add_argument('-w', '--workers', dest='workers', type=int, default=1,
                        help='Worker threads; rows keep manifest order either way (default: 1)')
    addCommonArguments(parser)
    return parser

def main(argv=None):
    store = None
    try:
        args = vars(buildParser().parse_args(argv))
        log = makeLog(args['logLevel'])
        if args['workers'] < 1:
            raise ValueError('--workers must be >= 1, got %d' % args['workers'])
        if not os.path.isfile(args['manifest']):
            raise ValueError('Manifest not found: %s' % args['manifest'])
        manifest = BenchManifest.load(args['manifest'])
        jobs, baselines = planJobs(manifest, log=log)
        log('Running %d jobs on %d worker(s)' % (len(jobs), args['workers']))
        if args['dbDir'] is not None:
            store = RunStore(args['dbDir'])
        # Solver progress from parallel workers would interleave; only show it at debug level
        solverLog = log if args['logLevel'] == parseLevels[-1] and args['workers'] == 1 else logNothing
        results = runJobs(jobs, manifest.trials, args['workers'], store, log=log, solverLog=solverLog)
        rows = tabulate(results, baselines)
        if args['out'] is not None:
            with open(args['out'], 'w', encoding='utf-8', newline='') as outFile:
                writeCsv(rows, outFile)
        else:
            writeCsv(rows, sys.stdout)
    except inputErrors as err:
        return reportError(err)
    finally:
        if store is not None:
            store.close()
    return 0
