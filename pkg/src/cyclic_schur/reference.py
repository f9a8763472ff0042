"""Reference counts of Schur rings over Z_n for n = 1..400.

Compiled-in data used to check enumerator and formula output.
"""

OMEGA_REFERENCE: dict[int, int] = {
    1: 1, 2: 1, 3: 2, 4: 3, 5: 3, 6: 7, 7: 4, 8: 10, 9: 7, 10: 10,
    11: 4, 12: 32, 13: 6, 14: 13, 15: 21, 16: 37, 17: 5, 18: 42, 19: 6, 20: 47,
    21: 27, 22: 13, 23: 4, 24: 172, 25: 13, 26: 19, 27: 25, 28: 61, 29: 6, 30: 147,
    31: 8, 32: 151, 33: 27, 34: 16, 35: 41, 36: 284, 37: 9, 38: 19, 39: 41, 40: 262,
    41: 8, 42: 188, 43: 8, 44: 61, 45: 140, 46: 13, 47: 4, 48: 1033, 49: 21, 50: 79,
    51: 35, 52: 91, 53: 6, 54: 232, 55: 41, 56: 334, 57: 40, 58: 19, 59: 4, 60: 1103,
    61: 12, 62: 25, 63: 187, 64: 657, 65: 67, 66: 147, 67: 8, 68: 77, 69: 27, 70: 281,
    71: 8, 72: 2311, 73: 12, 74: 28, 75: 185, 76: 90, 77: 53, 78: 284, 79: 8, 80: 1646,
    81: 92, 82: 25, 83: 4, 84: 1397, 85: 60, 86: 25, 87: 41, 88: 334, 89: 8, 90: 1581,
    91: 97, 92: 61, 93: 53, 94: 13, 95: 61, 96: 6719, 97: 12, 98: 128, 99: 177, 100: 563,
    101: 9, 102: 243, 103: 8, 104: 514, 105: 670, 106: 19, 107: 4, 108: 2219, 109: 12, 110: 281,
    111: 61, 112: 2030, 113: 10, 114: 277, 115: 41, 116: 91, 117: 291, 118: 13, 119: 69, 120: 10130,
    121: 21, 122: 37, 123: 55, 124: 119, 125: 58, 126: 2099, 127: 12, 128: 2989, 129: 53, 130: 457,
    131: 8, 132: 1397, 133: 99, 134: 25, 135: 854, 136: 442, 137: 8, 138: 188, 139: 8, 140: 2142,
    141: 27, 142: 25, 143: 81, 144: 21451, 145: 67, 146: 37, 147: 289, 148: 135, 149: 6, 150: 2124,
    151: 12, 152: 496, 153: 238, 154: 360, 155: 81, 156: 2157, 157: 12, 158: 25, 159: 41, 160: 11256,
    161: 53, 162: 1224, 163: 10, 164: 121, 165: 670, 166: 13, 167: 4, 168: 12494, 169: 43, 170: 411,
    171: 283, 172: 119, 173: 6, 174: 284, 175: 353, 176: 3030, 177: 27, 178: 25, 179: 4, 180: 17888,
    181: 18, 182: 658, 183: 81, 184: 334, 185: 100, 186: 366, 187: 69, 188: 61, 189: 1225, 190: 415,
    191: 8, 192: 45694, 193: 14, 194: 37, 195: 1142, 196: 904, 197: 9, 198: 1989, 199: 12, 200: 4973,
    201: 53, 202: 28, 203: 81, 204: 1863, 205: 93, 206: 25, 207: 177, 208: 3256, 209: 79, 210: 8339,
    211: 16, 212: 91, 213: 53, 214: 13, 215: 81, 216: 26202, 217: 125, 218: 37, 219: 82, 220: 2142,
    221: 119, 222: 421, 223: 8, 224: 13299, 225: 2096, 226: 31, 227: 4, 228: 2071, 229: 12, 230: 281,
    231: 839, 232: 514, 233: 8, 234: 3267, 235: 41, 236: 61, 237: 53, 238: 467, 239: 8, 240: 107165,
    241: 20, 242: 128, 243: 345, 244: 179, 245: 450, 246: 380, 247: 153, 248: 658, 249: 27, 250: 558,
    251: 8, 252: 23526, 253: 53, 254: 37, 255: 1051, 256: 14044, 257: 9, 258: 366, 259: 153, 260: 3590,
    261: 275, 262: 25, 263: 4, 264: 12494, 265: 67, 266: 672, 267: 55, 268: 119, 269: 6, 270: 14283,
    271: 16, 272: 2872, 273: 1611, 274: 25, 275: 395, 276: 1397, 277: 12, 278: 25, 279: 369, 280: 19935,
    281: 16, 282: 188, 283: 8, 284: 119, 285: 997, 286: 546, 287: 109, 288: 218905, 289: 31, 290: 457,
    291: 83, 292: 180, 293: 6, 294: 3327, 295: 41, 296: 766, 297: 1063, 298: 19, 299: 81, 300: 24672,
    301: 125, 302: 37, 303: 61, 304: 3027, 305: 133, 306: 2683, 307: 12, 308: 2715, 309: 53, 310: 549,
    311: 8, 312: 20014, 313: 16, 314: 37, 315: 8717, 316: 119, 317: 6, 318: 284, 319: 81, 320: 80768,
    321: 27, 322: 360, 323: 103, 324: 15934, 325: 659, 326: 31, 327: 81, 328: 694, 329: 53, 330: 8339,
    331: 16, 332: 61, 333: 442, 334: 13, 335: 81, 336: 126762, 337: 20, 338: 262, 339: 69, 340: 3275,
    341: 145, 342: 3168, 343: 113, 344: 658, 345: 670, 346: 19, 347: 4, 348: 2157, 349: 12, 350: 4128,
    351: 1949, 352: 13299, 353: 12, 354: 188, 355: 81, 356: 121, 357: 1152, 358: 13, 359: 4, 360: 257731,
    361: 43, 362: 55, 363: 289, 364: 5147, 365: 139, 366: 558, 367: 8, 368: 2030, 369: 373, 370: 679,
    371: 81, 372: 2745, 373: 12, 374: 467, 375: 1464, 376: 334, 377: 133, 378: 20441, 379: 16, 380: 3181,
    381: 79, 382: 25, 383: 4, 384: 319416, 385: 1318, 386: 43, 387: 369, 388: 181, 389: 6, 390: 14253,
    391: 69, 392: 7641, 393: 53, 394: 28, 395: 81, 396: 22162, 397: 18, 398: 37, 399: 1601, 400: 51694,
}


def reference_omega(n: int):
    """Table value for n, or None outside 1..400."""
    return OMEGA_REFERENCE.get(n)
