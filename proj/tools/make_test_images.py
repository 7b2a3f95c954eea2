#!/usr/bin/env python3
"""Regenerate the 256x256 grayscale fixtures in tests/data from scikit-image's bundled samples."""
import pathlib

import numpy as np
from skimage import color, data

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def box_half(img):
    h, w = img.shape
    img = img[: h - h % 2, : w - w % 2].astype(np.uint32)
    s = img[0::2, 0::2] + img[1::2, 0::2] + img[0::2, 1::2] + img[1::2, 1::2]
    return ((s + 2) // 4).astype(np.uint8)


def center_crop(img, n=256):
    h, w = img.shape
    y, x = (h - n) // 2, (w - n) // 2
    return img[y : y + n, x : x + n]


def write_pgm(path, img):
    h, w = img.shape
    path.write_bytes(b"P5\n%d %d\n255\n" % (w, h) + img.astype(np.uint8).tobytes())


def main():
    astro = np.round(color.rgb2gray(data.astronaut()) * 255).astype(np.uint8)
    images = {
        "cameraman": box_half(data.camera()),
        "moon": box_half(data.moon()),
        "coins": center_crop(data.coins()),
        "astronaut": box_half(astro),
    }
    OUT.mkdir(parents=True, exist_ok=True)
    for name, img in images.items():
        assert img.shape == (256, 256), (name, img.shape)
        write_pgm(OUT / f"{name}.pgm", img)
        print(name, img.shape)


if __name__ == "__main__":
    main()
