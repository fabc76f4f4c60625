import re
import cv2
import numpy as np
from graph_model import Partition, PixelCapError, defaultPixelCap
from . import ImageFeatures, InstanceFormatError, imageFormats

# Netpbm headers: magic, width, height, maxval separated by whitespace or
# comment lines
tokenParser = re.compile(rb'(?:\s|#[^\n]*\n?)*(\S+)')
commentParser = re.compile(rb'#[^\n]*')
channelCounts = {'P2': 1, 'P5': 1, 'P3': 3, 'P6': 3}

def _readHeader(data):
    tokens = []
    position = 0
    for _ in range(4):
        token = tokenParser.match(data, position)
        if token is None:
            raise InstanceFormatError('image header ended after %d fields' % len(tokens))
        tokens.append(token[1])
        position = token.end()
    magic = tokens[0].decode('ascii', errors='replace')
    if magic not in imageFormats:
        raise InstanceFormatError('unsupported image magic %r (expected one of %s)' % (magic, ', '.join(imageFormats)))
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError as err:
        raise InstanceFormatError('malformed image header: %s' % err) from err
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise InstanceFormatError('bad image dimensions %dx%d or maxval %d' % (width, height, maxval))
    # One whitespace byte separates the header from the payload
    return magic, width, height, maxval, position + 1

def _checkPayload(data, magic, width, height, maxval, offset):
    samples = width * height * channelCounts[magic]
    if magic in ('P5', 'P6'):
        needed = samples * (1 if maxval < 256 else 2)
        if len(data) - offset < needed:
            raise InstanceFormatError('truncated payload: %d of %d bytes' % (max(len(data) - offset, 0), needed))
        return
    values = commentParser.sub(b'', data[offset - 1:]).split()
    if len(values) < samples:
        raise InstanceFormatError('truncated payload: %d of %d samples' % (len(values), samples))
    if not all(value.isdigit() for value in values[:samples]):
        raise InstanceFormatError('non-numeric sample in plain payload')

def loadImage(path, fmt=None, c=1.0, pixelCap=defaultPixelCap):
    """Read a PGM/PPM image into per-pixel features.

    Channels are divided by maxval, so they lie in [0, 1]; gray images are
    replicated to three channels. Row and column indices are divided by
    (height - 1) and (width - 1)."""
    with open(path, 'rb') as imageFile:
        data = imageFile.read()
    magic, width, height, maxval, offset = _readHeader(data)
    if fmt is not None and fmt.split('-')[-1] != magic:
        raise InstanceFormatError('expected a %s image but %s has magic %s' % (fmt, path, magic))
    if width * height > pixelCap:
        raise PixelCapError('%s has %d pixels; the dense cost cap is %d (downscale first)' % (path, width * height, pixelCap))
    _checkPayload(data, magic, width, height, maxval, offset)

    pixels = cv2.imread(path, cv2.IMREAD_UNCHANGED)
    if pixels is None:
        raise InstanceFormatError('OpenCV could not decode %s' % path)
    # 8-bit decodes come back on a 0..255 scale; 16-bit keep the file's maxval
    scale = 255.0 if pixels.dtype == np.uint8 else float(maxval)
    if pixels.ndim == 3:
        pixels = cv2.cvtColor(pixels, cv2.COLOR_BGR2RGB)
    return ImageFeatures.fromArray(pixels.astype(float) / scale, c)

def writeMask(path, partition, width, height):
    """Write the partition as an 8-bit mask: 255 for +1 pixels, 0 for -1."""
    x = partition.x if isinstance(partition, Partition) else np.asarray(partition)
    if x.size != width * height:
        raise ValueError('Partition has %d entries but the image has %d pixels' % (x.size, width * height))
    mask = np.where(x > 0, 255, 0).astype(np.uint8).reshape(height, width)
    if not cv2.imwrite(str(path), mask):
        raise OSError('OpenCV could not write the mask to %s' % path)
