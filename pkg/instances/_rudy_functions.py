import re
from graph_model import Graph
from . import InstanceFormatError

# rudy: a "n m" header line, then one "i j w" line per edge (1-based nodes)
headerParser = re.compile(r'^\s*(\d+)\s+(\d+)\s*$')
edgeParser = re.compile(r'^\s*(\d+)\s+(\d+)\s+([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*$')

def parseRudy(text, allowNonpositive=True):
    n = expected = None
    edges = []
    # splitlines() takes care of \r\n as well as \n
    for lineNumber, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if n is None:
            header = headerParser.match(line)
            if header is None:
                raise InstanceFormatError('expected an "n m" header, got: %r' % line, lineNumber)
            n, expected = int(header[1]), int(header[2])
            if n < 1:
                raise InstanceFormatError('node count must be positive, got %d' % n, lineNumber)
            continue
        edge = edgeParser.match(line)
        if edge is None:
            raise InstanceFormatError('expected an "i j w" edge, got: %r' % line, lineNumber)
        i, j, w = int(edge[1]), int(edge[2]), float(edge[3])
        if not (1 <= i <= n and 1 <= j <= n):
            raise InstanceFormatError('edge (%d, %d) is out of range for n = %d' % (i, j, n), lineNumber)
        if i == j:
            raise InstanceFormatError('self-loop on node %d' % i, lineNumber)
        if not allowNonpositive and w <= 0:
            raise InstanceFormatError('edge (%d, %d) has non-positive weight %g' % (i, j, w), lineNumber)
        edges.append((i, j, w))
    if n is None:
        raise InstanceFormatError('no header line found')
    if len(edges) != expected:
        raise InstanceFormatError('header promises %d edges but %d were found' % (expected, len(edges)))
    return Graph(n, edges, allowNonpositive=allowNonpositive)

def _formatWeight(w):
    return '%d' % w if float(w).is_integer() else repr(float(w))

def serializeRudy(graph):
    lines = ['%d %d' % (graph.n, graph.numEdges)]
    lines.extend('%d %d %s' % (i, j, _formatWeight(w)) for i, j, w in graph.edges)
    return '\n'.join(lines) + '\n'

def loadRudyFile(path, allowNonpositive=True):
    with open(path, 'r', encoding='utf-8') as file:
        return parseRudy(file.read(), allowNonpositive)
