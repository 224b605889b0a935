"""Closed-form expansion coefficients (generated by tools/derive_coefficients.py).

TABLE[j] lists terms (p, q, scalars) of c_j(y | y0) = sum S * y**p * y0**q,
where S = sum num/den * kappa**i * b**l over scalars (i, l, num, den).
Do not edit by hand.
"""

VASICEK = (
    ((0, 0, ((0, 0, 1, 1),)),),
    ((0, 0, ((1, 0, 1, 2),)), (0, 2, ((2, 0, -1, 6),)), (1, 1, ((2, 0, -1, 6),)), (2, 0, ((2, 0, -1, 6),))),
    ((0, 0, ((2, 0, 1, 12),)), (0, 2, ((3, 0, -1, 6),)), (0, 4, ((4, 0, 1, 36),)), (1, 1, ((3, 0, -1, 6),)), (1, 3, ((4, 0, 1, 18),)), (2, 0, ((3, 0, -1, 6),)), (2, 2, ((4, 0, 1, 12),)), (3, 1, ((4, 0, 1, 18),)), (4, 0, ((4, 0, 1, 36),))),
    ((0, 0, ((3, 0, -1, 8),)), (0, 2, ((4, 0, 1, 40),)), (0, 4, ((5, 0, 1, 24),)), (0, 6, ((6, 0, -1, 216),)), (1, 1, ((4, 0, 3, 40),)), (1, 3, ((5, 0, 1, 12),)), (1, 5, ((6, 0, -1, 72),)), (2, 0, ((4, 0, 1, 40),)), (2, 2, ((5, 0, 1, 8),)), (2, 4, ((6, 0, -1, 36),)), (3, 1, ((5, 0, 1, 12),)), (3, 3, ((6, 0, -7, 216),)), (4, 0, ((5, 0, 1, 24),)), (4, 2, ((6, 0, -1, 36),)), (5, 1, ((6, 0, -1, 72),)), (6, 0, ((6, 0, -1, 216),))),
    ((0, 0, ((4, 0, -3, 80),)), (0, 2, ((5, 0, 13, 60),)), (0, 4, ((6, 0, -11, 360),)), (0, 6, ((7, 0, -1, 108),)), (0, 8, ((8, 0, 1, 1296),)), (1, 1, ((5, 0, 19, 60),)), (1, 3, ((6, 0, -17, 180),)), (1, 5, ((7, 0, -1, 36),)), (1, 7, ((8, 0, 1, 324),)), (2, 0, ((5, 0, 13, 60),)), (2, 2, ((6, 0, -1, 8),)), (2, 4, ((7, 0, -1, 18),)), (2, 6, ((8, 0, 5, 648),)), (3, 1, ((6, 0, -17, 180),)), (3, 3, ((7, 0, -7, 108),)), (3, 5, ((8, 0, 1, 81),)), (4, 0, ((6, 0, -11, 360),)), (4, 2, ((7, 0, -1, 18),)), (4, 4, ((8, 0, 19, 1296),)), (5, 1, ((7, 0, -1, 36),)), (5, 3, ((8, 0, 1, 81),)), (6, 0, ((7, 0, -1, 108),)), (6, 2, ((8, 0, 5, 648),)), (7, 1, ((8, 0, 1, 324),)), (8, 0, ((8, 0, 1, 1296),))),
    ((0, 0, ((5, 0, 19, 96),)), (0, 2, ((6, 0, -9, 224),)), (0, 4, ((7, 0, -7, 48),)), (0, 6, ((8, 0, 19, 1296),)), (0, 8, ((9, 0, 5, 2592),)), (0, 10, ((10, 0, -1, 7776),)), (1, 1, ((6, 0, -79, 672),)), (1, 3, ((7, 0, -3, 8),)), (1, 5, ((8, 0, 25, 432),)), (1, 7, ((9, 0, 5, 648),)), (1, 9, ((10, 0, -5, 7776),)), (2, 0, ((6, 0, -9, 224),)), (2, 2, ((7, 0, -25, 48),)), (2, 4, ((8, 0, 25, 216),)), (2, 6, ((9, 0, 25, 1296),)), (2, 8, ((10, 0, -5, 2592),)), (3, 1, ((7, 0, -3, 8),)), (3, 3, ((8, 0, 187, 1296),)), (3, 5, ((9, 0, 5, 162),)), (3, 7, ((10, 0, -5, 1296),)), (4, 0, ((7, 0, -7, 48),)), (4, 2, ((8, 0, 25, 216),)), (4, 4, ((9, 0, 95, 2592),)), (4, 6, ((10, 0, -5, 864),)), (5, 1, ((8, 0, 25, 432),)), (5, 3, ((9, 0, 5, 162),)), (5, 5, ((10, 0, -17, 2592),)), (6, 0, ((8, 0, 19, 1296),)), (6, 2, ((9, 0, 25, 1296),)), (6, 4, ((10, 0, -5, 864),)), (7, 1, ((9, 0, 5, 648),)), (7, 3, ((10, 0, -5, 1296),)), (8, 0, ((9, 0, 5, 2592),)), (8, 2, ((10, 0, -5, 2592),)), (9, 1, ((10, 0, -5, 7776),)), (10, 0, ((10, 0, -1, 7776),))),
    ((0, 0, ((6, 0, 79, 1344),)), (0, 2, ((7, 0, -167, 224),)), (0, 4, ((8, 0, 2021, 20160),)), (0, 6, ((9, 0, 29, 432),)), (0, 8, ((10, 0, -1, 192),)), (0, 10, ((11, 0, -1, 2592),)), (0, 12, ((12, 0, 1, 46656),)), (1, 1, ((7, 0, -275, 224),)), (1, 3, ((8, 0, 3473, 10080),)), (1, 5, ((9, 0, 35, 144),)), (1, 7, ((10, 0, -11, 432),)), (1, 9, ((11, 0, -5, 2592),)), (1, 11, ((12, 0, 1, 7776),)), (2, 0, ((7, 0, -167, 224),)), (2, 2, ((8, 0, 451, 960),)), (2, 4, ((9, 0, 35, 72),)), (2, 6, ((10, 0, -19, 288),)), (2, 8, ((11, 0, -5, 864),)), (2, 10, ((12, 0, 7, 15552),)), (3, 1, ((8, 0, 3473, 10080),)), (3, 3, ((9, 0, 257, 432),)), (3, 5, ((10, 0, -1, 9),)), (3, 7, ((11, 0, -5, 432),)), (3, 9, ((12, 0, 25, 23328),)), (4, 0, ((8, 0, 2021, 20160),)), (4, 2, ((9, 0, 35, 72),)), (4, 4, ((10, 0, -227, 1728),)), (4, 6, ((11, 0, -5, 288),)), (4, 8, ((12, 0, 5, 2592),)), (5, 1, ((9, 0, 35, 144),)), (5, 3, ((10, 0, -1, 9),)), (5, 5, ((11, 0, -17, 864),)), (5, 7, ((12, 0, 7, 2592),)), (6, 0, ((9, 0, 29, 432),)), (6, 2, ((10, 0, -19, 288),)), (6, 4, ((11, 0, -5, 288),)), (6, 6, ((12, 0, 47, 15552),)), (7, 1, ((10, 0, -11, 432),)), (7, 3, ((11, 0, -5, 432),)), (7, 5, ((12, 0, 7, 2592),)), (8, 0, ((10, 0, -1, 192),)), (8, 2, ((11, 0, -5, 864),)), (8, 4, ((12, 0, 5, 2592),)), (9, 1, ((11, 0, -5, 2592),)), (9, 3, ((12, 0, 25, 23328),)), (10, 0, ((11, 0, -1, 2592),)), (10, 2, ((12, 0, 7, 15552),)), (11, 1, ((12, 0, 1, 7776),)), (12, 0, ((12, 0, 1, 46656),))),
)

CIR = (
    ((0, 0, ((0, 0, 1, 1),)),),
    ((-1, -1, ((0, 1, 1, 2), (0, 2, -1, 2))), (0, 0, ((1, 0, 1, 4), (1, 1, 1, 2))), (0, 2, ((2, 0, -1, 24),)), (1, 1, ((2, 0, -1, 24),)), (2, 0, ((2, 0, -1, 24),))),
    ((-2, -2, ((0, 1, 1, 2), (0, 2, -1, 4), (0, 3, -1, 2), (0, 4, 1, 4))), (-1, -1, ((1, 1, 1, 4), (1, 2, 1, 4), (1, 3, -1, 2))), (-1, 1, ((2, 1, -1, 24), (2, 2, 1, 24))), (0, 0, ((2, 0, 1, 48), (2, 1, 5, 24), (2, 2, 7, 24))), (0, 2, ((3, 0, -1, 48), (3, 1, -1, 24))), (0, 4, ((4, 0, 1, 576),)), (1, -1, ((2, 1, -1, 24), (2, 2, 1, 24))), (1, 1, ((3, 0, -1, 48), (3, 1, -1, 24))), (1, 3, ((4, 0, 1, 288),)), (2, 0, ((3, 0, -1, 48), (3, 1, -1, 24))), (2, 2, ((4, 0, 1, 192),)), (3, 1, ((4, 0, 1, 288),)), (4, 0, ((4, 0, 1, 576),))),
    ((-3, -3, ((0, 1, 3, 2), (0, 2, -1, 2), (0, 3, -15, 8), (0, 4, 5, 8), (0, 5, 3, 8), (0, 6, -1, 8))), (-2, -2, ((1, 1, 3, 8), (1, 2, 9, 16), (1, 3, -3, 4), (1, 4, -9, 16), (1, 5, 3, 8))), (-2, 0, ((2, 1, -1, 16), (2, 2, 1, 32), (2, 3, 1, 16), (2, 4, -1, 32))), (-1, -1, ((2, 1, 3, 32), (2, 2, 1, 4), (2, 3, 1, 16), (2, 4, -13, 32))), (-1, 1, ((3, 1, -1, 32), (3, 2, -1, 32), (3, 3, 1, 16))), (-1, 3, ((4, 1, 1, 384), (4, 2, -1, 384))), (0, -2, ((2, 1, -1, 16), (2, 2, 1, 32), (2, 3, 1, 16), (2, 4, -1, 32))), (0, 0, ((3, 0, -1, 64), (3, 2, 5, 32), (3, 3, 3, 16))), (0, 2, ((4, 0, 1, 640), (4, 1, -5, 192), (4, 2, -7, 192))), (0, 4, ((5, 0, 1, 768), (5, 1, 1, 384))), (0, 6, ((6, 0, -1, 13824),)), (1, -1, ((3, 1, -1, 32), (3, 2, -1, 32), (3, 3, 1, 16))), (1, 1, ((4, 0, 3, 640), (4, 1, -3, 128), (4, 2, -5, 128))), (1, 3, ((5, 0, 1, 384), (5, 1, 1, 192))), (1, 5, ((6, 0, -1, 4608),)), (2, 0, ((4, 0, 1, 640), (4, 1, -5, 192), (4, 2, -7, 192))), (2, 2, ((5, 0, 1, 256), (5, 1, 1, 128))), (2, 4, ((6, 0, -1, 2304),)), (3, -1, ((4, 1, 1, 384), (4, 2, -1, 384))), (3, 1, ((5, 0, 1, 384), (5, 1, 1, 192))), (3, 3, ((6, 0, -7, 13824),)), (4, 0, ((5, 0, 1, 768), (5, 1, 1, 384))), (4, 2, ((6, 0, -1, 2304),)), (5, 1, ((6, 0, -1, 4608),)), (6, 0, ((6, 0, -1, 13824),))),
    ((-4, -4, ((0, 1, 9, 1), (0, 2, -9, 4), (0, 3, -49, 4), (0, 4, 49, 16), (0, 5, 7, 2), (0, 6, -7, 8), (0, 7, -1, 4), (0, 8, 1, 16))), (-3, -3, ((1, 1, 3, 2), (1, 2, 5, 2), (1, 3, -23, 8), (1, 4, -25, 8), (1, 5, 13, 8), (1, 6, 5, 8), (1, 7, -1, 4))), (-3, -1, ((2, 1, -1, 4), (2, 2, 1, 12), (2, 3, 5, 16), (2, 4, -5, 48), (2, 5, -1, 16), (2, 6, 1, 48))), (-2, -2, ((2, 1, 5, 16), (2, 2, 53, 96), (2, 3, 1, 8), (2, 4, -91, 96), (2, 5, -7, 16), (2, 6, 19, 48))), (-2, 0, ((3, 1, -1, 16), (3, 2, -3, 32), (3, 3, 1, 8), (3, 4, 3, 32), (3, 5, -1, 16))), (-2, 2, ((4, 1, 1, 192), (4, 2, -1, 384), (4, 3, -1, 192), (4, 4, 1, 384))), (-1, -3, ((2, 1, -1, 4), (2, 2, 1, 12), (2, 3, 5, 16), (2, 4, -5, 48), (2, 5, -1, 16), (2, 6, 1, 48))), (-1, -1, ((3, 1, 1, 32), (3, 2, 1, 8), (3, 3, 3, 16), (3, 4, -1, 32), (3, 5, -5, 16))), (-1, 1, ((4, 1, -7, 960), (4, 2, -1, 20), (4, 3, -1, 96), (4, 4, 13, 192))), (-1, 3, ((5, 1, 1, 384), (5, 2, 1, 384), (5, 3, -1, 192))), (-1, 5, ((6, 1, -1, 6912), (6, 2, 1, 6912))), (0, -2, ((3, 1, -1, 16), (3, 2, -3, 32), (3, 3, 1, 8), (3, 4, 3, 32), (3, 5, -1, 16))), (0, 0, ((4, 0, -3, 1280), (4, 1, -13, 480), (4, 2, -53, 1920), (4, 3, 7, 64), (4, 4, 17, 128))), (0, 2, ((5, 0, 13, 1920), (5, 1, 1, 120), (5, 2, -5, 192), (5, 3, -1, 32))), (0, 4, ((6, 0, -11, 23040), (6, 1, 5, 2304), (6, 2, 7, 2304))), (0, 6, ((7, 0, -1, 13824), (7, 1, -1, 6912))), (0, 8, ((8, 0, 1, 331776),)), (1, -1, ((4, 1, -7, 960), (4, 2, -1, 20), (4, 3, -1, 96), (4, 4, 13, 192))), (1, 1, ((5, 0, 19, 1920), (5, 1, 11, 640), (5, 2, -3, 128), (5, 3, -7, 192))), (1, 3, ((6, 0, -17, 11520), (6, 1, 5, 1152), (6, 2, 7, 1152))), (1, 5, ((7, 0, -1, 4608), (7, 1, -1, 2304))), (1, 7, ((8, 0, 1, 82944),)), (2, -2, ((4, 1, 1, 192), (4, 2, -1, 384), (4, 3, -1, 192), (4, 4, 1, 384))), (2, 0, ((5, 0, 13, 1920), (5, 1, 1, 120), (5, 2, -5, 192), (5, 3, -1, 32))), (2, 2, ((6, 0, -1, 512), (6, 1, 47, 6912), (6, 2, 61, 6912))), (2, 4, ((7, 0, -1, 2304), (7, 1, -1, 1152))), (2, 6, ((8, 0, 5, 165888),)), (3, -1, ((5, 1, 1, 384), (5, 2, 1, 384), (5, 3, -1, 192))), (3, 1, ((6, 0, -17, 11520), (6, 1, 5, 1152), (6, 2, 7, 1152))), (3, 3, ((7, 0, -7, 13824), (7, 1, -7, 6912))), (3, 5, ((8, 0, 1, 20736),)), (4, 0, ((6, 0, -11, 23040), (6, 1, 5, 2304), (6, 2, 7, 2304))), (4, 2, ((7, 0, -1, 2304), (7, 1, -1, 1152))), (4, 4, ((8, 0, 19, 331776),)), (5, -1, ((6, 1, -1, 6912), (6, 2, 1, 6912))), (5, 1, ((7, 0, -1, 4608), (7, 1, -1, 2304))), (5, 3, ((8, 0, 1, 20736),)), (6, 0, ((7, 0, -1, 13824), (7, 1, -1, 6912))), (6, 2, ((8, 0, 5, 165888),)), (7, 1, ((8, 0, 1, 82944),)), (8, 0, ((8, 0, 1, 331776),))),
    ((-5, -5, ((0, 1, 90, 1), (0, 2, -18, 1), (0, 3, -1025, 8), (0, 4, 205, 8), (0, 5, 1365, 32), (0, 6, -273, 32), (0, 7, -75, 16), (0, 8, 15, 16), (0, 9, 5, 32), (0, 10, -1, 32))), (-4, -4, ((1, 1, 45, 4), (1, 2, 315, 16), (1, 3, -335, 16), (1, 4, -1715, 64), (1, 5, 385, 32), (1, 6, 245, 32), (1, 7, -5, 2), (1, 8, -35, 64), (1, 9, 5, 32))), (-4, -2, ((2, 1, -15, 8), (2, 2, 15, 32), (2, 3, 245, 96), (2, 4, -245, 384), (2, 5, -35, 48), (2, 6, 35, 192), (2, 7, 5, 96), (2, 8, -5, 384))), (-3, -3, ((2, 1, 35, 16), (2, 2, 275, 96), (2, 3, -5, 192), (2, 4, -625, 128), (2, 5, -545, 192), (2, 6, 75, 32), (2, 7, 65, 96), (2, 8, -125, 384))), (-3, -1, ((3, 1, -5, 16), (3, 2, -25, 48), (3, 3, 115, 192), (3, 4, 125, 192), (3, 5, -65, 192), (3, 6, -25, 192), (3, 7, 5, 96))), (-3, 1, ((4, 1, 5, 192), (4, 2, -5, 576), (4, 3, -25, 768), (4, 4, 25, 2304), (4, 5, 5, 768), (4, 6, -5, 2304))), (-2, -4, ((2, 1, -15, 8), (2, 2, 15, 32), (2, 3, 245, 96), (2, 4, -245, 384), (2, 5, -35, 48), (2, 6, 35, 192), (2, 7, 5, 96), (2, 8, -5, 384))), (-2, -2, ((3, 1, 15, 64), (3, 2, 235, 384), (3, 3, 55, 192), (3, 4, -125, 384), (3, 5, -85, 96), (3, 6, -55, 192), (3, 7, 35, 96))), (-2, 0, ((4, 1, -17, 384), (4, 2, -289, 2304), (4, 3, -3, 64), (4, 4, 479, 2304), (4, 5, 35, 384), (4, 6, -95, 1152))), (-2, 2, ((5, 1, 5, 768), (5, 2, 5, 512), (5, 3, -5, 384), (5, 4, -5, 512), (5, 5, 5, 768))), (-2, 4, ((6, 1, -5, 13824), (6, 2, 5, 27648), (6, 3, 5, 13824), (6, 4, -5, 27648))), (-1, -3, ((3, 1, -5, 16), (3, 2, -25, 48), (3, 3, 115, 192), (3, 4, 125, 192), (3, 5, -65, 192), (3, 6, -25, 192), (3, 7, 5, 96))), (-1, -1, ((4, 1, 25, 512), (4, 2, 21, 512), (4, 3, 47, 768), (4, 4, 19, 128), (4, 5, -15, 256), (4, 6, -185, 768))), (-1, 1, ((5, 1, 1, 256), (5, 2, -1, 64), (5, 3, -23, 384), (5, 4, 5, 768), (5, 5, 25, 384))), (-1, 3, ((6, 1, -1, 9216), (6, 2, 7, 1152), (6, 3, 5, 4608), (6, 4, -65, 9216))), (-1, 5, ((7, 1, -5, 27648), (7, 2, -5, 27648), (7, 3, 5, 13824))), (-1, 7, ((8, 1, 5, 663552), (8, 2, -5, 663552))), (0, -2, ((4, 1, -17, 384), (4, 2, -289, 2304), (4, 3, -3, 64), (4, 4, 479, 2304), (4, 5, 35, 384), (4, 6, -95, 1152))), (0, 0, ((5, 0, 19, 3072), (5, 1, 19, 1536), (5, 2, -19, 512), (5, 3, -1, 16), (5, 4, 115, 1536), (5, 5, 79, 768))), (0, 2, ((6, 0, -9, 14336), (6, 1, 71, 4608), (6, 2, 5, 288), (6, 3, -55, 2304), (6, 4, -125, 4608))), (0, 4, ((7, 0, -7, 6144), (7, 1, -1, 576), (7, 2, 25, 9216), (7, 3, 5, 1536))), (0, 6, ((8, 0, 19, 331776), (8, 1, -25, 165888), (8, 2, -35, 165888))), (0, 8, ((9, 0, 5, 1327104), (9, 1, 5, 663552))), (0, 10, ((10, 0, -1, 7962624),)), (1, -3, ((4, 1, 5, 192), (4, 2, -5, 576), (4, 3, -25, 768), (4, 4, 25, 2304), (4, 5, 5, 768), (4, 6, -5, 2304))), (1, -1, ((5, 1, 1, 256), (5, 2, -1, 64), (5, 3, -23, 384), (5, 4, 5, 768), (5, 5, 25, 384))), (1, 1, ((6, 0, -79, 43008), (6, 1, 659, 27648), (6, 2, 427, 13824), (6, 3, -325, 13824), (6, 4, -935, 27648))), (1, 3, ((7, 0, -3, 1024), (7, 1, -11, 2304), (7, 2, 25, 4608), (7, 3, 5, 768))), (1, 5, ((8, 0, 25, 110592), (8, 1, -155, 331776), (8, 2, -205, 331776))), (1, 7, ((9, 0, 5, 331776), (9, 1, 5, 165888))), (1, 9, ((10, 0, -5, 7962624),)), (2, -2, ((5, 1, 5, 768), (5, 2, 5, 512), (5, 3, -5, 384), (5, 4, -5, 512), (5, 5, 5, 768))), (2, 0, ((6, 0, -9, 14336), (6, 1, 71, 4608), (6, 2, 5, 288), (6, 3, -55, 2304), (6, 4, -125, 4608))), (2, 2, ((7, 0, -25, 6144), (7, 1, -85, 13824), (7, 2, 235, 27648), (7, 3, 125, 13824))), (2, 4, ((8, 0, 25, 55296), (8, 1, -5, 5184), (8, 2, -25, 20736))), (2, 6, ((9, 0, 25, 663552), (9, 1, 25, 331776))), (2, 8, ((10, 0, -5, 2654208),)), (3, -1, ((6, 1, -1, 9216), (6, 2, 7, 1152), (6, 3, 5, 4608), (6, 4, -65, 9216))), (3, 1, ((7, 0, -3, 1024), (7, 1, -11, 2304), (7, 2, 25, 4608), (7, 3, 5, 768))), (3, 3, ((8, 0, 187, 331776), (8, 1, -745, 663552), (8, 2, -935, 663552))), (3, 5, ((9, 0, 5, 82944), (9, 1, 5, 41472))), (3, 7, ((10, 0, -5, 1327104),)), (4, -2, ((6, 1, -5, 13824), (6, 2, 5, 27648), (6, 3, 5, 13824), (6, 4, -5, 27648))), (4, 0, ((7, 0, -7, 6144), (7, 1, -1, 576), (7, 2, 25, 9216), (7, 3, 5, 1536))), (4, 2, ((8, 0, 25, 55296), (8, 1, -5, 5184), (8, 2, -25, 20736))), (4, 4, ((9, 0, 95, 1327104), (9, 1, 95, 663552))), (4, 6, ((10, 0, -5, 884736),)), (5, -1, ((7, 1, -5, 27648), (7, 2, -5, 27648), (7, 3, 5, 13824))), (5, 1, ((8, 0, 25, 110592), (8, 1, -155, 331776), (8, 2, -205, 331776))), (5, 3, ((9, 0, 5, 82944), (9, 1, 5, 41472))), (5, 5, ((10, 0, -17, 2654208),)), (6, 0, ((8, 0, 19, 331776), (8, 1, -25, 165888), (8, 2, -35, 165888))), (6, 2, ((9, 0, 25, 663552), (9, 1, 25, 331776))), (6, 4, ((10, 0, -5, 884736),)), (7, -1, ((8, 1, 5, 663552), (8, 2, -5, 663552))), (7, 1, ((9, 0, 5, 331776), (9, 1, 5, 165888))), (7, 3, ((10, 0, -5, 1327104),)), (8, 0, ((9, 0, 5, 1327104), (9, 1, 5, 663552))), (8, 2, ((10, 0, -5, 2654208),)), (9, 1, ((10, 0, -5, 7962624),)), (10, 0, ((10, 0, -1, 7962624),))),
    ((-6, -6, ((0, 1, 1350, 1), (0, 2, -225, 1), (0, 3, -15807, 8), (0, 4, 5269, 16), (0, 5, 22935, 32), (0, 6, -7645, 64), (0, 7, -3069, 32), (0, 8, 1023, 64), (0, 9, 165, 32), (0, 10, -55, 64), (0, 11, -3, 32), (0, 12, 1, 64))), (-5, -5, ((1, 1, 135, 1), (1, 2, 243, 1), (1, 3, -3939, 16), (1, 4, -5535, 16), (1, 5, 9015, 64), (1, 6, 7371, 64), (1, 7, -261, 8), (1, 8, -405, 32), (1, 9, 195, 64), (1, 10, 27, 64), (1, 11, -3, 32))), (-5, -3, ((2, 1, -45, 2), (2, 2, 9, 2), (2, 3, 1025, 32), (2, 4, -205, 32), (2, 5, -1365, 128), (2, 6, 273, 128), (2, 7, 75, 64), (2, 8, -15, 64), (2, 9, -5, 128), (2, 10, 1, 128))), (-4, -4, ((2, 1, 405, 16), (2, 2, 1683, 64), (2, 3, -495, 64), (2, 4, -11395, 256), (2, 5, -3395, 128), (2, 6, 707, 32), (2, 7, 155, 16), (2, 8, -1055, 256), (2, 9, -95, 128), (2, 10, 31, 128))), (-4, -2, ((3, 1, -45, 16), (3, 2, -315, 64), (3, 3, 335, 64), (3, 4, 1715, 256), (3, 5, -385, 128), (3, 6, -245, 128), (3, 7, 5, 8), (3, 8, 35, 256), (3, 9, -5, 128))), (-4, 0, ((4, 1, 15, 64), (4, 2, -15, 256), (4, 3, -245, 768), (4, 4, 245, 3072), (4, 5, 35, 384), (4, 6, -35, 1536), (4, 7, -5, 768), (4, 8, 5, 3072))), (-3, -5, ((2, 1, -45, 2), (2, 2, 9, 2), (2, 3, 1025, 32), (2, 4, -205, 32), (2, 5, -1365, 128), (2, 6, 273, 128), (2, 7, 75, 64), (2, 8, -15, 64), (2, 9, -5, 128), (2, 10, 1, 128))), (-3, -3, ((3, 1, 75, 32), (3, 2, 355, 64), (3, 3, 45, 128), (3, 4, -1155, 256), (3, 5, -315, 64), (3, 6, -105, 64), (3, 7, 165, 64), (3, 8, 155, 256), (3, 9, -45, 128))), (-3, -1, ((4, 1, -27, 64), (4, 2, -97, 128), (4, 3, -115, 768), (4, 4, 1955, 1536), (4, 5, 569, 768), (4, 6, -229, 384), (4, 7, -65, 384), (4, 8, 125, 1536))), (-3, 1, ((5, 1, 5, 128), (5, 2, 25, 384), (5, 3, -115, 1536), (5, 4, -125, 1536), (5, 5, 65, 1536), (5, 6, 25, 1536), (5, 7, -5, 768))), (-3, 3, ((6, 1, -5, 2304), (6, 2, 5, 6912), (6, 3, 25, 9216), (6, 4, -25, 27648), (6, 5, -5, 9216), (6, 6, 5, 27648))), (-2, -4, ((3, 1, -45, 16), (3, 2, -315, 64), (3, 3, 335, 64), (3, 4, 1715, 256), (3, 5, -385, 128), (3, 6, -245, 128), (3, 7, 5, 8), (3, 8, 35, 256), (3, 9, -5, 128))), (-2, -2, ((4, 1, 279, 512), (4, 2, 485, 1024), (4, 3, 33, 512), (4, 4, -3, 64), (4, 5, -111, 256), (4, 6, -381, 512), (4, 7, -45, 256), (4, 8, 325, 1024))), (-2, 0, ((5, 1, -7, 256), (5, 2, -163, 1536), (5, 3, -103, 768), (5, 4, 53, 1536), (5, 5, 97, 384), (5, 6, 55, 768), (5, 7, -35, 384))), (-2, 2, ((6, 1, 3, 1024), (6, 2, 313, 18432), (6, 3, 13, 1536), (6, 4, -503, 18432), (6, 5, -35, 3072), (6, 6, 95, 9216))), (-2, 4, ((7, 1, -5, 9216), (7, 2, -5, 6144), (7, 3, 5, 4608), (7, 4, 5, 6144), (7, 5, -5, 9216))), (-2, 6, ((8, 1, 5, 221184), (8, 2, -5, 442368), (8, 3, -5, 221184), (8, 4, 5, 442368))), (-1, -3, ((4, 1, -27, 64), (4, 2, -97, 128), (4, 3, -115, 768), (4, 4, 1955, 1536), (4, 5, 569, 768), (4, 6, -229, 384), (4, 7, -65, 384), (4, 8, 125, 1536))), (-1, -1, ((5, 1, 63, 1024), (5, 2, 125, 1024), (5, 3, -15, 256), (5, 4, -11, 256), (5, 5, 83, 512), (5, 6, -27, 512), (5, 7, -49, 256))), (-1, 1, ((6, 1, -55, 14336), (6, 2, 1853, 129024), (6, 3, -7, 384), (6, 4, -629, 9216), (6, 5, 25, 1536), (6, 6, 275, 4608))), (-1, 3, ((7, 1, -11, 6144), (7, 2, 1, 1536), (7, 3, 31, 3072), (7, 4, -5, 6144), (7, 5, -25, 3072))), (-1, 5, ((8, 1, 1, 12288), (8, 2, -1, 1728), (8, 3, -5, 55296), (8, 4, 65, 110592))), (-1, 7, ((9, 1, 5, 442368), (9, 2, 5, 442368), (9, 3, -5, 221184))), (-1, 9, ((10, 1, -1, 2654208), (10, 2, 1, 2654208))), (0, -4, ((4, 1, 15, 64), (4, 2, -15, 256), (4, 3, -245, 768), (4, 4, 245, 3072), (4, 5, 35, 384), (4, 6, -35, 1536), (4, 7, -5, 768), (4, 8, 5, 3072))), (0, -2, ((5, 1, -7, 256), (5, 2, -163, 1536), (5, 3, -103, 768), (5, 4, 53, 1536), (5, 5, 97, 384), (5, 6, 55, 768), (5, 7, -35, 384))), (0, 0, ((6, 0, 79, 86016), (6, 1, 3377, 129024), (6, 2, 7811, 193536), (6, 3, -125, 2304), (6, 4, -5399, 55296), (6, 5, 487, 9216), (6, 6, 2357, 27648))), (0, 2, ((7, 0, -167, 28672), (7, 1, -319, 43008), (7, 2, 19, 768), (7, 3, 43, 1536), (7, 4, -65, 3072), (7, 5, -37, 1536))), (0, 4, ((8, 0, 2021, 5160960), (8, 1, -169, 55296), (8, 2, -811, 221184), (8, 3, 335, 110592), (8, 4, 745, 221184))), (0, 6, ((9, 0, 29, 221184), (9, 1, 1, 4608), (9, 2, -25, 110592), (9, 3, -5, 18432))), (0, 8, ((10, 0, -1, 196608), (10, 1, 25, 2654208), (10, 2, 35, 2654208))), (0, 10, ((11, 0, -1, 5308416), (11, 1, -1, 2654208))), (0, 12, ((12, 0, 1, 191102976),)), (1, -3, ((5, 1, 5, 128), (5, 2, 25, 384), (5, 3, -115, 1536), (5, 4, -125, 1536), (5, 5, 65, 1536), (5, 6, 25, 1536), (5, 7, -5, 768))), (1, -1, ((6, 1, -55, 14336), (6, 2, 1853, 129024), (6, 3, -7, 384), (6, 4, -629, 9216), (6, 5, 25, 1536), (6, 6, 275, 4608))), (1, 1, ((7, 0, -275, 28672), (7, 1, -379, 32256), (7, 2, 119, 3072), (7, 3, 403, 9216), (7, 4, -145, 6144), (7, 5, -287, 9216))), (1, 3, ((8, 0, 3473, 2580480), (8, 1, -451, 55296), (8, 2, -511, 55296), (8, 3, 85, 13824), (8, 4, 185, 27648))), (1, 5, ((9, 0, 35, 73728), (9, 1, 175, 221184), (9, 2, -155, 221184), (9, 3, -85, 110592))), (1, 7, ((10, 0, -11, 442368), (10, 1, 35, 884736), (10, 2, 5, 98304))), (1, 9, ((11, 0, -5, 5308416), (11, 1, -5, 2654208))), (1, 11, ((12, 0, 1, 31850496),)), (2, -2, ((6, 1, 3, 1024), (6, 2, 313, 18432), (6, 3, 13, 1536), (6, 4, -503, 18432), (6, 5, -35, 3072), (6, 6, 95, 9216))), (2, 0, ((7, 0, -167, 28672), (7, 1, -319, 43008), (7, 2, 19, 768), (7, 3, 43, 1536), (7, 4, -65, 3072), (7, 5, -37, 1536))), (2, 2, ((8, 0, 451, 245760), (8, 1, -93, 8192), (8, 2, -5203, 442368), (8, 3, 2065, 221184), (8, 4, 3935, 442368))), (2, 4, ((9, 0, 35, 36864), (9, 1, 85, 55296), (9, 2, -5, 3456), (9, 3, -5, 3456))), (2, 6, ((10, 0, -19, 294912), (10, 1, 5, 49152), (10, 2, 55, 442368))), (2, 8, ((11, 0, -5, 1769472), (11, 1, -5, 884736))), (2, 10, ((12, 0, 7, 63700992),)), (3, -3, ((6, 1, -5, 2304), (6, 2, 5, 6912), (6, 3, 25, 9216), (6, 4, -25, 27648), (6, 5, -5, 9216), (6, 6, 5, 27648))), (3, -1, ((7, 1, -11, 6144), (7, 2, 1, 1536), (7, 3, 31, 3072), (7, 4, -5, 6144), (7, 5, -25, 3072))), (3, 1, ((8, 0, 3473, 2580480), (8, 1, -451, 55296), (8, 2, -511, 55296), (8, 3, 85, 13824), (8, 4, 185, 27648))), (3, 3, ((9, 0, 257, 221184), (9, 1, 281, 147456), (9, 2, -745, 442368), (9, 3, -125, 73728))), (3, 5, ((10, 0, -1, 9216), (10, 1, 145, 884736), (10, 2, 175, 884736))), (3, 7, ((11, 0, -5, 884736), (11, 1, -5, 442368))), (3, 9, ((12, 0, 25, 95551488),)), (4, -2, ((7, 1, -5, 9216), (7, 2, -5, 6144), (7, 3, 5, 4608), (7, 4, 5, 6144), (7, 5, -5, 9216))), (4, 0, ((8, 0, 2021, 5160960), (8, 1, -169, 55296), (8, 2, -811, 221184), (8, 3, 335, 110592), (8, 4, 745, 221184))), (4, 2, ((9, 0, 35, 36864), (9, 1, 85, 55296), (9, 2, -5, 3456), (9, 3, -5, 3456))), (4, 4, ((10, 0, -227, 1769472), (10, 1, 173, 884736), (10, 2, 23, 98304))), (4, 6, ((11, 0, -5, 589824), (11, 1, -5, 294912))), (4, 8, ((12, 0, 5, 10616832),)), (5, -1, ((8, 1, 1, 12288), (8, 2, -1, 1728), (8, 3, -5, 55296), (8, 4, 65, 110592))), (5, 1, ((9, 0, 35, 73728), (9, 1, 175, 221184), (9, 2, -155, 221184), (9, 3, -85, 110592))), (5, 3, ((10, 0, -1, 9216), (10, 1, 145, 884736), (10, 2, 175, 884736))), (5, 5, ((11, 0, -17, 1769472), (11, 1, -17, 884736))), (5, 7, ((12, 0, 7, 10616832),)), (6, -2, ((8, 1, 5, 221184), (8, 2, -5, 442368), (8, 3, -5, 221184), (8, 4, 5, 442368))), (6, 0, ((9, 0, 29, 221184), (9, 1, 1, 4608), (9, 2, -25, 110592), (9, 3, -5, 18432))), (6, 2, ((10, 0, -19, 294912), (10, 1, 5, 49152), (10, 2, 55, 442368))), (6, 4, ((11, 0, -5, 589824), (11, 1, -5, 294912))), (6, 6, ((12, 0, 47, 63700992),)), (7, -1, ((9, 1, 5, 442368), (9, 2, 5, 442368), (9, 3, -5, 221184))), (7, 1, ((10, 0, -11, 442368), (10, 1, 35, 884736), (10, 2, 5, 98304))), (7, 3, ((11, 0, -5, 884736), (11, 1, -5, 442368))), (7, 5, ((12, 0, 7, 10616832),)), (8, 0, ((10, 0, -1, 196608), (10, 1, 25, 2654208), (10, 2, 35, 2654208))), (8, 2, ((11, 0, -5, 1769472), (11, 1, -5, 884736))), (8, 4, ((12, 0, 5, 10616832),)), (9, -1, ((10, 1, -1, 2654208), (10, 2, 1, 2654208))), (9, 1, ((11, 0, -5, 5308416), (11, 1, -5, 2654208))), (9, 3, ((12, 0, 25, 95551488),)), (10, 0, ((11, 0, -1, 5308416), (11, 1, -1, 2654208))), (10, 2, ((12, 0, 7, 63700992),)), (11, 1, ((12, 0, 1, 31850496),)), (12, 0, ((12, 0, 1, 191102976),))),
)
