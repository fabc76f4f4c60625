import json
from data_store import sanitize
from instances import bruteForce, oracleCap
from . import CliParser, addInstanceArguments, inputErrors, loadInstance, makeLog, logLevels, reportError

def buildParser():
    parser = CliParser(description='Exact minimum of x^T C x by enumeration (n <= %d)' % oracleCap)
    addInstanceArguments(parser)
    parser.add_argument('-o', '--out', dest='out', type=str, metavar='path.json',
                        help='Write the optimum (default: print it to stdout)')
    parser.add_argument('-l', '--log_level', dest='logLevel', default='warning',
                        help='One of: %s (default: warning)' % ', '.join(logLevels))
    return parser

def main(argv=None):
    try:
        args = vars(buildParser().parse_args(argv))
        log = makeLog(args['logLevel'])
        instance = loadInstance(inputPath=args['input'], sbm=args['sbm'], image=args['image'],
                                cost=args['cost'], pq=args['pq'], c=args['c'], seed=args['seed'], log=log)
        partition, value = bruteForce(instance.cost)
        result = {
            'instanceId': instance.instanceId,
            'n': instance.n,
            'optimalValue': value,
            'cutValue': instance.cutOf(partition),
            'partition': partition.tolist()
        }
        log('Optimum for %s: %g' % (instance.instanceId, value))
        text = json.dumps(sanitize(result), sort_keys=True, indent=2)
        if args['out'] is not None:
            with open(args['out'], 'w', encoding='utf-8') as resultFile:
                resultFile.write(text + '\n')
        else:
            print(text)
    except inputErrors as err:
        return reportError(err)
    return 0
