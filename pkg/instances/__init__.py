"""Problem instances: planted-community graphs, rudy files, images and the exact oracle."""
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

oracleCap = 22
imageFormats = ['P2', 'P3', 'P5', 'P6']

class InstanceFormatError(ValueError):
    def __init__(self, message, lineNumber=None):
        if lineNumber is not None:
            message = 'line %d: %s' % (lineNumber, message)
        super().__init__(message)
        self.lineNumber = lineNumber

class OracleCapError(ValueError):
    pass

class SBMSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    p: float
    q: float
    seed: int = 0

    @field_validator('seed')
    @classmethod
    def sixtyFourBitSeed(cls, value):
        if not 0 <= value < 2 ** 64:
            raise ValueError('seed must fit in 64 unsigned bits, got %s' % value)
        return value

    @model_validator(mode='after')
    def plantedCommunities(self):
        if not 0 < self.q < self.p < 1:
            raise ValueError('SBM needs 0 < q < p < 1, got p = %g, q = %g' % (self.p, self.q))
        if not 1 <= self.m <= self.n / 2:
            raise ValueError('SBM needs 1 <= m <= n / 2, got n = %d, m = %d' % (self.n, self.m))
        return self

    @classmethod
    def fromString(cls, text, seed=0):
        """Parse the 'n,m,p,q' form used on the command line."""
        parts = text.split(',')
        if len(parts) != 4:
            raise ValueError('Expected n,m,p,q but got: %s' % text)
        return cls(n=int(parts[0]), m=int(parts[1]), p=float(parts[2]), q=float(parts[3]), seed=seed)

class ImageFeatures:
    """Per-pixel features [r, g, b, c * row, c * col] in row-major pixel order.

    colors and positions are kept unweighted (both in [0, 1]) so the
    color/position weight can be changed without reloading the image."""
    def __init__(self, colors, positions, width, height, c=1.0):
        colors = np.asarray(colors, dtype=float)
        positions = np.asarray(positions, dtype=float)
        if colors.shape != (width * height, 3) or positions.shape != (width * height, 2):
            raise ValueError('Feature arrays do not match a %dx%d image' % (width, height))
        self.colors = colors
        self.positions = positions
        self.width = width
        self.height = height
        self.c = float(c)

    @classmethod
    def fromArray(cls, pixels, c=1.0):
        """pixels: height x width (gray) or height x width x 3 array already scaled to [0, 1]."""
        pixels = np.asarray(pixels, dtype=float)
        if pixels.ndim == 2:
            pixels = np.repeat(pixels[:, :, None], 3, axis=2)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ValueError('Expected a gray or RGB pixel array, got shape %s' % (pixels.shape,))
        height, width = pixels.shape[:2]
        rows, cols = np.meshgrid(np.arange(height), np.arange(width), indexing='ij')
        positions = np.column_stack([rows.ravel() / max(height - 1, 1),
                                     cols.ravel() / max(width - 1, 1)])
        return cls(pixels.reshape(-1, 3), positions, width, height, c)

    @property
    def nPixels(self):
        return self.width * self.height

    @property
    def features(self):
        return np.hstack([self.colors, self.c * self.positions])

    def withWeight(self, c):
        return ImageFeatures(self.colors, self.positions, self.width, self.height, c)

# pylint: disable=C0413
from ._sbm_functions import sbmGenerate
from ._rudy_functions import parseRudy, serializeRudy, loadRudyFile
from ._image_functions import loadImage, writeMask
from ._oracle_functions import bruteForce, randomBaseline
