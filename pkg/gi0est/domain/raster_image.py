import math

import numpy as np

NODATA_MARKER = math.nan


class RasterImage(object):
    def __init__(self, width, height, pixels, nodata_marker=NODATA_MARKER):
        pixels = np.asarray(pixels, dtype=np.float64)
        if pixels.size != width * height:
            raise ValueError('Raster of {}x{} needs {} pixels, got {}'.format(width, height, width * height, pixels.size))
        self.width = width
        self.height = height
        self.pixels = pixels.reshape((height, width))
        self.nodata_marker = nodata_marker

    def window(self, row, column, side):
        """Square window centred on (row, column), or None where it falls outside the image."""
        half = side // 2
        if row - half < 0 or column - half < 0 or row + half >= self.height or column + half >= self.width:
            return None
        return self.pixels[row - half:row + half + 1, column - half:column + half + 1]

    def row_band(self, row, side):
        """The side rows centred on row, or None where they fall outside the image."""
        half = side // 2
        if row - half < 0 or row + half >= self.height:
            return None
        return self.pixels[row - half:row + half + 1, :]

    def region(self, x, y, width, height):
        if x < 0 or y < 0 or x + width > self.width or y + height > self.height:
            raise ValueError('Region {}x{}+{}+{} is outside the {}x{} raster'.format(
                width, height, x, y, self.width, self.height))
        return self.pixels[y:y + height, x:x + width]
