from data_store import RunStore
from instances import serializeRudy, writeMask
from rounding import defaultTrials
from . import (CliParser, InputError, addCommonArguments, addInstanceArguments, buildConfig,
               exitCodes, inputErrors, loadInstance, makeLog, methodNames, reportError, runPipeline)

def buildParser():
    parser = CliParser(description='Solve min x^T C x over x in {-1, 1}^n with vector or matrix ADMM')
    parser.add_argument('-m', '--method', dest='method', choices=list(methodNames), required=True,
                        help=('v: binary vector splitting; mr1: matrix splitting with r = 1; '
                              'mrr: matrix splitting with r = ceil(sqrt(2n)) plus randomized rounding'))
    addInstanceArguments(parser)
    parser.add_argument('--rho0', dest='rho0', type=float,
                        help=('Initial penalty (default: 0.1 for v, or the smallest value meeting the descent conditions '
                              'with --enforce-theorem1; 1.0 for mr1 / mrr)'))
    parser.add_argument('--alpha', dest='alpha', type=float,
                        help='Penalty growth factor (default: 1.05 for v, 1.1 for mr1 / mrr)')
    parser.add_argument('--eps', dest='eps', type=float,
                        help='Stopping tolerance on the constraint residuals (default: 1e-6 for v, 1e-5 for mr1 / mrr)')
    parser.add_argument('--max-iter', dest='maxIter', type=int,
                        help='Iteration limit (default: 2000 for v, 500 for mr1 / mrr)')
    parser.add_argument('--schedule', dest='schedule', choices=['geometric', 'constant'],
                        help='Penalty schedule for v (default: geometric)')
    parser.add_argument('--enforce-theorem1', dest='enforceTheorem1', action='store_true', default=None,
                        help='For v, refuse a rho0 that fails the monotone descent conditions')
    parser.add_argument('--trials', dest='trials', type=int, default=defaultTrials,
                        help='Gaussian draws per factor width for mrr rounding (default: %d)' % defaultTrials)
    parser.add_argument('--trace', dest='trace', type=str, metavar='path.jsonl',
                        help='Write one JSON object per iteration')
    parser.add_argument('-o', '--out', dest='out', type=str, metavar='path.json',
                        help='Write the run summary (default: print it to stdout)')
    parser.add_argument('--mask', dest='mask', type=str, metavar='path.pgm',
                        help='For --image runs, write the segmentation as a 0 / 255 mask')
    parser.add_argument('--save-instance', dest='saveInstance', type=str, metavar='path.rudy',
                        help='Write the (generated or parsed) graph in rudy format')
    addCommonArguments(parser)
    return parser

def main(argv=None):
    try:
        args = vars(buildParser().parse_args(argv))
        log = makeLog(args['logLevel'])
        instance = loadInstance(inputPath=args['input'], sbm=args['sbm'], image=args['image'],
                                cost=args['cost'], pq=args['pq'], c=args['c'], seed=args['seed'], log=log)
        if args['mask'] is not None and instance.image is None:
            raise InputError('--mask only applies to --image runs')
        if args['saveInstance'] is not None:
            if instance.graph is None:
                raise InputError('--save-instance needs a graph instance (--input or --sbm)')
            with open(args['saveInstance'], 'w', encoding='utf-8') as instanceFile:
                instanceFile.write(serializeRudy(instance.graph))
        cfg = buildConfig(args['method'], {key: args[key] for key in
                                           ['rho0', 'alpha', 'eps', 'maxIter', 'seed', 'schedule', 'enforceTheorem1']})
        summary, trace = runPipeline(instance, args['method'], cfg, trials=args['trials'], log=log)

        if args['trace'] is not None:
            trace.writeJsonLines(args['trace'])
        if args['mask'] is not None:
            writeMask(args['mask'], summary.partition, instance.image.width, instance.image.height)
        if args['out'] is not None:
            with open(args['out'], 'w', encoding='utf-8') as summaryFile:
                summaryFile.write(summary.toJson() + '\n')
        else:
            print(summary.toJson())
        if args['dbDir'] is not None:
            store = RunStore(args['dbDir'])
            runId = summary.storeKey()
            store.addRun(runId, summary.model_dump(), trace.records, log=log)
            store.close()
    except inputErrors as err:
        return reportError(err)
    return exitCodes[summary.status]
