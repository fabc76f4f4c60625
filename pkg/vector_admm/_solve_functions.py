import time
import numpy as np
from data_store import logToConsole
from numerics import symEigen, spectralConstants
from graph_model import objective
from . import PenaltyConditionError, RunTrace, theorem1Violations
from ._update_functions import initVector, initialPenalty, updateY, updateX, updateDual
from ._diagnostic_functions import lagrangianVector, dualIdentityResidual, roundedIterate

progressEvery = 50

def solveVector(cost, cfg, log=logToConsole, onIteration=None):
    """Run the y -> x -> dual loop until ||x - y||_2 <= eps or maxIter.

    onIteration(state) may return a dict of extra fields for the trace record."""
    trace = RunTrace(cfg.maxIter)
    setupStart = time.perf_counter()
    # One factorization serves every rho^k
    eigen = symEigen(cost.C)
    L1, LH = spectralConstants(cost, eigen)
    rho0 = initialPenalty(cost, cfg)
    if cfg.enforceTheorem1:
        failures = theorem1Violations(rho0, L1, LH, cfg.growth)
        if failures:
            raise PenaltyConditionError('rho0 = %g fails the descent conditions: %s' % (rho0, '; '.join(failures)))
    elif cfg.rho0 is not None and rho0 <= LH:
        log('WARNING: rho0 = %g <= LH = %g; the x-step is not a minimization until rho grows past LH' % (rho0, LH))
    state = initVector(cost, cfg, rho0)
    trace.timings['setup'] = time.perf_counter() - setupStart

    log('Vector ADMM on n = %d, L1 = %g, LH = %g, rho0 = %g (.=%d iterations)' % (cost.n, L1, LH, rho0, progressEvery))
    loopStart = time.perf_counter()
    bestRounded = float('inf')
    cappedAt = None
    status = 'max_iter'
    for _ in range(cfg.maxIter):
        rho = state.rho
        state = updateY(state)
        state = updateX(state, cost, eigen)
        state = updateDual(state, cfg)

        primal = float(np.linalg.norm(state.x - state.y))
        rounded = objective(cost, roundedIterate(state))
        bestRounded = min(bestRounded, rounded)
        record = trace.addRecord(k=state.k,
                                 objective=float(state.x @ cost.C @ state.x),
                                 lagrangian=lagrangianVector(state, cost, rho),
                                 primalResidual=primal,
                                 dualResidual=dualIdentityResidual(state, cost),
                                 rho=rho,
                                 roundedObjective=rounded,
                                 bestRoundedObjective=bestRounded)
        if onIteration is not None:
            record.update(onIteration(state) or {})
        if cappedAt is None and state.rho >= cfg.rhoCap and cfg.growth > 1:
            cappedAt = state.k
            log('WARNING: rho reached its cap %g at iteration %d; the schedule is constant from here' % (cfg.rhoCap, cappedAt))
        if state.k % progressEvery == 0:
            log('.', end='')
        if primal <= cfg.eps:
            status = 'converged'
            break
    trace.timings['iterations'] = time.perf_counter() - loopStart
    trace.flags['rhoCappedAt'] = cappedAt
    trace.finish(status)
    log('')
    log('Finished after %d iterations (%s); ||x - y|| = %g, ||2Cx + mu|| = %g' % (state.k, status, trace.last()['primalResidual'], trace.last()['dualResidual']))
    return state, trace
