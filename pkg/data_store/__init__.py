import os
import sys
import json
import math
import shutil
import hashlib
import diskcache
import numpy as np

# Indexes that every store directory holds
diskCacheIndices = ['runs', 'traces']
defaultDbDir = os.environ.get('ADMMCUT_DB_DIR', '/tmp/admm-cut')

def logToConsole(value, end='\n'):
    sys.stdout.write('\x1b[0;32;40m' + value + end + '\x1b[0m')
    sys.stdout.flush()

def logToStderr(value, end='\n'):
    # For scripts whose stdout carries their results
    sys.stderr.write('\x1b[0;32;40m' + value + end + '\x1b[0m')
    sys.stderr.flush()

def logNothing(value, end='\n'): #pylint: disable=W0613
    return None

def sanitize(original):
    # json can't represent numpy scalars, or infinite or nan floats
    if isinstance(original, np.generic):
        original = original.item()
    if isinstance(original, dict):
        return {key: sanitize(value) for key, value in original.items()}
    if isinstance(original, (list, tuple)):
        return [sanitize(value) for value in original]
    if isinstance(original, float) and (math.isinf(original) or math.isnan(original)):
        return str(original)
    return original

def runKey(instanceId, method, seed, configEcho):
    payload = json.dumps(sanitize({
        'instanceId': instanceId,
        'method': method,
        'seed': seed,
        'config': configEcho
    }), sort_keys=True)
    return hashlib.sha1(payload.encode()).hexdigest()

class RunStore:
    def __init__(self, dbDir=defaultDbDir):
        self.dbDir = dbDir
        if not os.path.exists(self.dbDir):
            os.makedirs(self.dbDir)
        self.indices = {}
        for ctype in diskCacheIndices:
            self.indices[ctype] = diskcache.Index(os.path.join(self.dbDir, ctype + '.diskCacheIndex'))

    def __getitem__(self, runId):
        return self.indices['runs'][runId]

    def __contains__(self, runId):
        return runId in self.indices['runs']

    def __delitem__(self, runId):
        del self.indices['runs'][runId]
        if runId in self.indices['traces']:
            del self.indices['traces'][runId]

    def __iter__(self):
        yield from self.indices['runs'].values()

    def __len__(self):
        return len(self.indices['runs'])

    def addRun(self, runId, summary, traceRecords=None, log=logNothing):
        self.indices['runs'][runId] = sanitize(summary)
        if traceRecords is not None:
            self.indices['traces'][runId] = sanitize(list(traceRecords))
        log('Stored run %s (%s on %s)' % (runId, summary.get('method'), summary.get('instanceId')))

    def getTrace(self, runId):
        return self.indices['traces'].get(runId, None)

    def findRuns(self, instanceId=None, method=None):
        for summary in self:
            if instanceId is not None and summary.get('instanceId') != instanceId:
                continue
            if method is not None and summary.get('method') != method:
                continue
            yield summary

    def close(self):
        for index in self.indices.values():
            index.cache.close()

    def purge(self):
        self.close()
        shutil.rmtree(self.dbDir)
