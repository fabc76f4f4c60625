import time
import numpy as np
from data_store import logToConsole
from graph_model import objective
from vector_admm import RunTrace
from . import ScheduleError, rankFor
from ._update_functions import initMatrix, initialPenalty, updateY, updateZX, updateDualsMatrix
from ._diagnostic_functions import lagrangianMatrix, feasibilityResiduals, roundedIterate

progressEvery = 10

def solveMatrix(cost, cfg, log=logToConsole, onIteration=None):
    """Run the Y -> (Z, X) -> duals loop until max(||X - Y||_F, ||Z - XY^T||_F) <= eps or maxIter."""
    if not cfg.alpha > 1:
        # A geometric schedule needs alpha > 1 for sum 1/rho^k and
        # sum rho^(k+1)/(rho^k)^2 to be finite
        raise ScheduleError('alpha = %g does not give a summable penalty schedule; use alpha > 1' % cfg.alpha)
    trace = RunTrace(cfg.maxIter)
    setupStart = time.perf_counter()
    r = rankFor(cost.n, cfg.rMode)
    rho0 = initialPenalty(cfg)
    state = initMatrix(cost, cfg, rho0)
    initialDualNorm = max(np.linalg.norm(state.lambda1), np.linalg.norm(state.lambda2), 1.0)
    trace.timings['setup'] = time.perf_counter() - setupStart

    log('Matrix ADMM on n = %d, r = %d, rho0 = %g (.=%d iterations)' % (cost.n, r, rho0, progressEvery))
    loopStart = time.perf_counter()
    bestRounded = float('inf')
    dualBoundTripped = False
    cappedAt = None
    status = 'max_iter'
    for _ in range(cfg.maxIter):
        rho = state.rho
        state = updateY(state)
        state = updateZX(state, cost)
        state = updateDualsMatrix(state, cfg)

        feasXY, feasZ = feasibilityResiduals(state)
        dual1 = float(np.linalg.norm(state.lambda1))
        dual2 = float(np.linalg.norm(state.lambda2))
        exceeded = bool(max(dual1, dual2) > cfg.dualGrowthLimit * initialDualNorm)
        if exceeded and not dualBoundTripped:
            dualBoundTripped = True
            log('WARNING: dual norm %g passed %g x its starting value at iteration %d; the bounded-dual assumption looks violated' % (max(dual1, dual2), cfg.dualGrowthLimit, state.k))
        if cappedAt is None and state.rho >= cfg.rhoCap:
            cappedAt = state.k
            log('WARNING: rho reached its cap %g at iteration %d' % (cfg.rhoCap, cappedAt))
        rounded = objective(cost, roundedIterate(state))
        bestRounded = min(bestRounded, rounded)
        record = trace.addRecord(k=state.k,
                                 objective=float(np.sum(cost.C * state.Z.T)),
                                 lagrangian=lagrangianMatrix(state, cost, rho),
                                 feasibilityXY=feasXY,
                                 feasibilityZ=feasZ,
                                 dual1Norm=dual1,
                                 dual2Norm=dual2,
                                 dualBoundExceeded=exceeded,
                                 rhoCapped=cappedAt is not None,
                                 rho=rho,
                                 roundedObjective=rounded,
                                 bestRoundedObjective=bestRounded)
        if onIteration is not None:
            record.update(onIteration(state) or {})
        if state.k % progressEvery == 0:
            log('.', end='')
        if max(feasXY, feasZ) <= cfg.eps:
            status = 'converged'
            break
    trace.timings['iterations'] = time.perf_counter() - loopStart
    trace.flags['rhoCappedAt'] = cappedAt
    trace.flags['dualBoundExceeded'] = dualBoundTripped
    trace.flags['rank'] = r
    trace.finish(status)
    log('')
    log('Finished after %d iterations (%s); ||X - Y|| = %g, ||Z - XY^T|| = %g' % (state.k, status, trace.last()['feasibilityXY'], trace.last()['feasibilityZ']))
    return state, trace
