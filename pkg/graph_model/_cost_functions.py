import numpy as np
from scipy.spatial.distance import pdist, squareform
from data_store import logToConsole
from . import CostMatrix, PixelCapError, defaultPixelCap

def buildMaxcutCost(graph):
    # C = (A - Diag(A1)) / 4, so that -x^T C x is the weight of the cut
    A = graph.adjacency()
    C = (A - np.diag(A.sum(axis=1))) / 4.0
    return CostMatrix(C, 'maxcut')

def buildCommunityCost(graph, p, q, log=logToConsole):
    if not 0 < q < p < 1:
        log('WARNING: community cost expects 0 < q < p < 1, got p = %g, q = %g' % (p, q))
    A = graph.adjacency()
    C = ((p + q) / 2.0) * np.ones((graph.n, graph.n)) - A
    return CostMatrix(C, 'community')

def buildImageCost(img, c=None, mode='maxcut', pixelCap=defaultPixelCap):
    if img.nPixels > pixelCap:
        raise PixelCapError('Image has %d pixels; the dense cost cap is %d' % (img.nPixels, pixelCap))
    features = img.features if c is None else img.withWeight(c).features
    # Squared feature distances; squareform leaves an exact zero diagonal
    A = squareform(pdist(features, 'sqeuclidean')) if img.nPixels > 1 else np.zeros((1, 1))
    if mode == 'maxcut':
        # No /4 here: a positive scale leaves the argmin over {-1, 1}^n alone
        return CostMatrix(A - np.diag(A.sum(axis=1)), 'maxcut')
    if mode == 'community':
        a = A.sum() / float(img.nPixels ** 2)
        return CostMatrix(a * np.ones_like(A) - A, 'community')
    raise ValueError('Unknown image cost mode: %s' % mode)
