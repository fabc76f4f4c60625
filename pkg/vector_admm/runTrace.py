import json
import numpy as np
from data_store import sanitize

traceStatuses = ['converged', 'max_iter']

class RunTrace:
    """Per-iteration records of one solve plus its final status."""
    def __init__(self, maxIter):
        self.maxIter = maxIter
        self.records = []
        self.status = None
        self.timings = {}
        self.flags = {}

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        yield from self.records

    def addRecord(self, **fields):
        assert len(self.records) < self.maxIter
        self.records.append(fields)
        return fields

    def finish(self, status):
        assert status in traceStatuses
        self.status = status

    def column(self, name):
        return np.array([record[name] for record in self.records])

    def last(self):
        return self.records[-1] if self.records else None

    def jsonLines(self):
        for record in self.records:
            yield json.dumps(sanitize(record), sort_keys=True)

    def writeJsonLines(self, path):
        with open(path, 'w', encoding='utf-8') as traceFile:
            for line in self.jsonLines():
                traceFile.write(line + '\n')
