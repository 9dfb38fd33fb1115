"""Reference values for the tables, used for reproduction and checks.

Numbers are copied as printed (4-5 decimals). ``None`` marks entries the
tables leave undefined.
"""

EXACT_ERROR_TABLES = {
    3: [
        # (B, alpha, c_alpha, errors T/R/M/L, percent errors T/R/M/L)
        (3, 0.1944, 4.667, (-0.09743, -0.14502, -0.10696, -0.11349), (-50.12, -74.6, -55.02, -58.38)),
        (3, 0.0278, 6.0, (0.02199, None, None, -0.0022), (79.09, None, None, -7.91)),
        (4, 0.1250, 4.5, (-0.0196, -0.04126, -0.01561, -0.02737), (-15.68, -33.01, -12.49, -21.9)),
        (4, 0.0417, 6.5, (-0.00293, -0.03511, -0.02636, -0.01806), (-7.02, -84.19, -63.21, -43.32)),
        (4, 0.0046, 8.0, (0.01372, None, None, 0.0016), (298.17, None, None, 34.7)),
        (5, 0.0934, 5.2, (-0.01913, -0.04032, -0.02375, -0.02801), (-20.48, -43.16, -25.43, -29.99)),
        (5, 0.0394, 6.4, (0.00136, -0.0226, -0.01243, -0.00965), (3.46, -57.37, -31.55, -24.49)),
        (5, 0.0085, 8.4, (0.0065, -0.00784, -0.00656, -0.00195), (76.42, -92.29, -77.22, -22.99)),
        (6, 0.1416, 4.333, (-0.02704, -0.03515, -0.02126, -0.03009), (-19.1, -24.83, -15.01, -21.25)),
        (6, 0.0521, 6.333, (-0.00966, -0.02862, -0.01939, -0.01856), (-19.11, -54.93, -37.23, -35.63)),
        (6, 0.0120, 8.333, (0.0035, -0.00934, -0.00684, -0.00344), (29.2, -77.8, -57.04, -28.68)),
        (7, 0.1118, 4.571, (-0.0101, -0.01849, -0.00717, -0.01357), (-9.03, -16.54, -6.41, -12.14)),
        (7, 0.0515, 6.0, (-0.00171, -0.01668, -0.00776, -0.00858), (-3.33, -32.4, -15.06, -16.66)),
        (7, 0.0162, 8.0, (0.00212, -0.01, -0.00654, -0.00408), (13.06, -61.75, -40.35, -25.17)),
        (8, 0.0789, 5.25, (-0.00646, -0.0171, -0.00803, -0.01124), (-8.19, -21.67, -10.18, -14.24)),
        (8, 0.0469, 6.25, (-0.00296, -0.0157, -0.00854, -0.00892), (-6.32, -33.47, -18.21, -19.01)),
        (8, 0.0099, 9.0, (0.00121, -0.00683, -0.00503, -0.00312), (12.21, -69.01, -50.83, -31.49)),
    ],
    4: [
        # (B, alpha, c_alpha, errors T/R/M/L, percent errors T/R/M/L)
        (3, 0.1476, 5.8, (-0.02584, -0.06349, -0.03758, -0.04434), (-17.51, -43.01, -25.46, -30.04)),
        (3, 0.0538, 7.0, (0.0181, -0.03189, -0.01631, -0.00938), (33.64, -59.28, -30.32, -17.44)),
        (3, 0.0174, 8.2, (0.02465, -0.01592, -0.0129, -0.00195), (141.69, -91.47, -74.15, -11.23)),
        (4, 0.1053, 6.0, (0.00631, -0.01759, -0.00083, -0.00622), (5.99, -16.7, -0.78, -5.91)),
        (4, 0.0517, 7.5, (0.00586, -0.02564, -0.01477, -0.01213), (11.33, -49.59, -28.58, -23.46)),
        (4, 0.0115, 9.3, (0.01406, -0.00866, -0.00584, -0.00099), (122.24, -75.3, -50.82, -8.63)),
        (5, 0.1066, 6.12, (-0.00068, -0.01823, -0.00594, -0.01019), (-0.64, -17.1, -5.57, -9.56)),
        (5, 0.0548, 7.32, (0.00757, -0.01529, -0.00563, -0.00545), (13.81, -27.89, -10.27, -9.94)),
        (5, 0.0120, 9.72, (0.0091, -0.00734, -0.00453, -0.00151), (75.85, -61.17, -37.72, -12.58)),
        (6, 0.1081, 6.2, (-0.00582, -0.0197, -0.01003, -0.01349), (-5.39, -18.22, -9.27, -12.48)),
        (6, 0.0558, 7.4, (0.00438, -0.01353, -0.0057, -0.00592), (7.86, -24.25, -10.21, -10.6)),
        (6, 0.0103, 10.0, (0.00827, -0.00453, -0.00201, 0.00012), (80.25, -44.0, -19.47, 1.2)),
        (7, 0.1000, 6.257, (-0.00025, -0.01172, -0.00375, -0.00667), (-0.25, -11.72, -3.75, -6.67)),
        (7, 0.0520, 7.629, (0.00233, -0.01248, -0.0062, -0.00627), (4.49, -24.0, -11.92, -12.06)),
        (7, 0.0100, 10.371, (0.00566, -0.00434, -0.0023, -0.00069), (56.62, -43.36, -22.95, -6.85)),
        (8, 0.1000, 6.3, (-0.00211, -0.01189, -0.00513, -0.00764), (-2.11, -11.89, -5.13, -7.64)),
        (8, 0.0510, 7.5, (0.00656, -0.00594, -0.0003, -0.00071), (12.86, -11.64, -0.58, -1.39)),
        (8, 0.0110, 10.35, (0.00481, -0.004, -0.00201, -0.0007), (43.76, -36.34, -18.24, -6.39)),
    ],
    5: [
        # (B, alpha, c_alpha, errors T/R/M/L, percent errors T/R/M/L)
        (3, 0.1172, 7.2, (0.00849, -0.03016, -0.01138, -0.01478), (7.24, -25.73, -9.71, -12.61)),
        (3, 0.0559, 8.267, (0.02638, -0.02072, -0.00712, -0.00363), (47.2, -37.06, -12.73, -6.49)),
        (3, 0.0151, 9.867, (0.02763, -0.01082, -0.00688, -0.00019), (183.01, -71.63, -45.55, -1.24)),
        (4, 0.1129, 7.4, (0.0033, -0.02187, -0.00931, -0.01235), (2.92, -19.37, -8.24, -10.94)),
        (4, 0.0597, 8.6, (0.01221, -0.01835, -0.00861, -0.00757), (20.46, -30.73, -14.42, -12.68)),
        (4, 0.0102, 11.0, (0.01636, -0.00543, -0.00269, 0.00054), (160.43, -53.21, -26.35, 5.32)),
        (5, 0.1070, 7.52, (0.00383, -0.01487, -0.00548, -0.00799), (3.58, -13.9, -5.13, -7.47)),
        (5, 0.0560, 8.80, (0.0103, -0.01228, -0.00482, -0.00443), (18.39, -21.94, -8.6, -7.92)),
        (5, 0.0100, 11.52, (0.0113, -0.00414, -0.00182, 0.00026), (113.02, -41.42, -18.19, 2.6)),
        (6, 0.1025, 7.60, (0.00488, -0.01001, -0.00253, -0.00463), (4.76, -9.76, -2.47, -4.52)),
        (6, 0.0550, 8.933, (0.0078, -0.0101, -0.00407, -0.00393), (14.17, -18.36, -7.4, -7.14)),
        (6, 0.0109, 11.733, (0.00855, -0.00373, -0.00162, -0.0001), (78.45, -34.25, -14.9, -0.91)),
        (7, 0.1025, 7.657, (0.00248, -0.00988, -0.00368, -0.00547), (2.42, -9.64, -3.59, -5.34)),
        (7, 0.0527, 9.029, (0.00768, -0.00713, -0.00208, -0.00206), (14.57, -13.53, -3.96, -3.9)),
        (7, 0.0100, 12.114, (0.00652, -0.00311, -0.00141, -0.00024), (65.23, -31.12, -14.12, -2.38)),
        (8, 0.1039, 7.6, (0.00348, -0.00677, -0.00144, -0.00314), (3.35, -6.53, -1.39, -3.02)),
        (8, 0.0521, 9.1, (0.00655, -0.00608, -0.00175, -0.00177), (12.57, -11.67, -3.35, -3.4)),
        (8, 0.0104, 12.2, (0.00552, -0.00276, -0.0012, -0.00024), (53.12, -26.53, -11.58, -2.31)),
    ],
}

NULL_SIMULATION_TABLES = {
    3: [
        # (B, alpha, simulated minus nominal for T/R/M/L, percent errors T/R/M/L)
        (5, 0.10, (0.02563, 0.02489, 0.02489, 0.02563), (25.63, 24.89, 24.89, 25.63)),
        (5, 0.05, (-0.01045, -0.01119, -0.01119, -0.01045), (-20.9, -22.38, -22.38, -20.9)),
        (5, 0.01, (-0.00926, 0.0135, 0.0135, -0.00157), (-92.6, 135.0, 135.0, -15.7)),
        (10, 0.10, (-0.00824, -0.00824, -0.00824, -0.00824), (-8.24, -8.24, -8.24, -8.24)),
        (10, 0.05, (-0.00534, -0.00534, -0.00534, -0.00534), (-10.68, -10.68, -10.68, -10.68)),
        (10, 0.01, (-0.00274, 0.0008, 0.0008, 0.0008), (-27.4, 8.0, 8.0, 8.0)),
        (15, 0.10, (0.00553, 0.00553, 0.00553, 0.00553), (5.53, 5.53, 5.53, 5.53)),
        (15, 0.05, (-0.00357, -0.00357, -0.00357, -0.00357), (-7.14, -7.14, -7.14, -7.14)),
        (15, 0.01, (-0.00286, 0.00097, -0.00048, -0.00048), (-28.6, 9.7, -4.8, -4.8)),
        (20, 0.10, (0.00309, 0.00309, 0.00309, 0.00309), (3.09, 3.09, 3.09, 3.09)),
        (20, 0.05, (0.00146, 0.00146, 0.00146, 0.00146), (2.92, 2.92, 2.92, 2.92)),
        (20, 0.01, (-0.00174, 0.00146, 0.00146, 0.00146), (-17.4, 14.6, 14.6, 14.6)),
    ],
    4: [
        # (B, alpha, simulated minus nominal for T/R/M/L, percent errors T/R/M/L)
        (5, 0.10, (-0.00496, 0.00845, -0.00496, 0.00845), (-4.96, 8.45, -4.96, 8.45)),
        (5, 0.05, (-0.01558, 0.01756, 0.0057, 0.0057), (-31.16, 35.12, 11.4, 11.4)),
        (5, 0.01, (-0.00826, 0.01022, 0.00271, -0.0006), (-82.6, 102.2, 27.1, -6.0)),
        (10, 0.10, (-0.00449, 0.0062, 0.00187, 0.00187), (-4.49, 6.2, 1.87, 1.87)),
        (10, 0.05, (-0.00481, 0.00374, -0.00242, -0.00242), (-9.62, 7.48, -4.84, -4.84)),
        (10, 0.01, (-0.00353, 0.00313, 0.00136, -0.00019), (-35.3, 31.3, 13.6, -1.9)),
        (15, 0.10, (-0.0051, -0.00052, -0.0051, -0.00052), (-5.1, -0.52, -5.1, -0.52)),
        (15, 0.05, (-0.00456, -0.0017, -0.0017, -0.0017), (-9.12, -3.4, -3.4, -3.4)),
        (15, 0.01, (-0.00259, 0.00132, 0.00065, -0.00051), (-25.9, 13.2, 6.5, -5.1)),
        (20, 0.10, (-0.00482, -0.00412, -0.00412, -0.00412), (-4.82, -4.12, -4.12, -4.12)),
        (20, 0.05, (-0.00371, -0.00089, -0.001, -0.001), (-7.42, -1.78, -2.0, -2.0)),
        (20, 0.01, (-0.0022, 0.00085, 0.0, -9e-05), (-22.0, 8.5, 0.0, -0.9)),
    ],
    5: [
        # (B, alpha, simulated minus nominal for T/R/M/L, percent errors T/R/M/L)
        (5, 0.10, (-0.01148, 0.00813, -0.0054, 0.00813), (-11.48, 8.13, -5.4, 8.13)),
        (5, 0.05, (-0.01615, 0.00699, -0.00171, -0.00171), (-32.3, 13.98, -3.42, -3.42)),
        (5, 0.01, (-0.00704, 0.00373, 0.00212, 4e-05), (-70.4, 37.3, 21.2, 0.4)),
        (10, 0.10, (-0.00619, 0.00571, -0.00078, 0.00067), (-6.19, 5.71, -0.78, 0.67)),
        (10, 0.05, (-0.00652, 0.00203, 0.0011, 0.0011), (-13.04, 4.06, 2.2, 2.2)),
        (10, 0.01, (-0.00371, 0.00212, 0.00051, -0.00046), (-37.1, 21.2, 5.1, -4.6)),
        (15, 0.10, (-0.00444, 0.00012, -0.00136, -0.00136), (-4.44, 0.12, -1.36, -1.36)),
        (15, 0.05, (-0.00531, 0.00063, -0.00172, -0.00172), (-10.62, 1.26, -3.44, -3.44)),
        (15, 0.01, (-0.00238, 0.00096, 1e-05, -0.00017), (-23.8, 9.6, 0.1, -1.7)),
        (20, 0.10, (-0.00443, -0.00028, -0.00329, -0.00028), (-4.43, -0.28, -3.29, -0.28)),
        (20, 0.05, (-0.00372, 0.00181, -0.00061, -0.00061), (-7.44, 3.62, -1.22, -1.22)),
        (20, 0.01, (-0.00174, 0.00065, -5e-05, -0.00016), (-17.4, 6.5, -0.5, -1.6)),
    ],
}

# shift patterns are multiplied by the family standard deviation, printed
# in the tables as ``printed_scale``; level 0.05 and target power 0.90
POWER_TABLES = {
    7: {
        "family": "uniform",
        "printed_scale": 0.2887,
        "K": 3,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,0,1), "H", 9, 0.9186, 0.8178, 0.1007),
            ((-1,0,1), "MA", 11, 0.9146, 0.8773, 0.0373),
            ((-1,0,1), "MB", 10, 0.9214, 0.8478, 0.0736),
            ((-1,0,1), "LA", 13, 0.9069, 0.9418, -0.0348),
            ((-1,0,1), "LB", 13, 0.9205, 0.9411, -0.0207),
            ((-2/3,0,2/3), "H", 19, 0.9003, 0.8259, 0.0744),
            ((-2/3,0,2/3), "MA", 23, 0.9023, 0.8836, 0.0187),
            ((-2/3,0,2/3), "MB", 22, 0.9050, 0.8673, 0.0377),
            ((-2/3,0,2/3), "LA", 26, 0.9119, 0.9238, -0.0119),
            ((-2/3,0,2/3), "LB", 25, 0.9070, 0.9153, -0.0083),
            ((-1/2,0,1/2), "H", 34, 0.9023, 0.8367, 0.0656),
            ((-1/2,0,1/2), "MA", 40, 0.9039, 0.8963, 0.0076),
            ((-1/2,0,1/2), "MB", 39, 0.9053, 0.8882, 0.017),
            ((-1/2,0,1/2), "LA", 42, 0.9023, 0.9115, -0.0092),
            ((-1/2,0,1/2), "LB", 42, 0.9065, 0.9117, -0.0053),
            ((-1/3,0,1/3), "H", 76, 0.9003, 0.8556, 0.0447),
            ((-1/3,0,1/3), "MA", 86, 0.9013, 0.8987, 0.0026),
            ((-1/3,0,1/3), "MB", 85, 0.9019, 0.8932, 0.0087),
            ((-1/3,0,1/3), "LA", 88, 0.9006, 0.9038, -0.0032),
            ((-1/3,0,1/3), "LB", 88, 0.9026, 0.9033, -0.0006),
        ],
    },
    8: {
        "family": "uniform",
        "printed_scale": 0.2887,
        "K": 5,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,-1/2,0,1/2,1), "H", 8, 0.9237, 0.7903, 0.1333),
            ((-1,-1/2,0,1/2,1), "MA", 10, 0.9155, 0.9109, 0.0046),
            ((-1,-1/2,0,1/2,1), "MB", 9, 0.9024, 0.8623, 0.0402),
            ((-1,-1/2,0,1/2,1), "LA", 11, 0.9178, 0.9410, -0.0232),
            ((-1,-1/2,0,1/2,1), "LB", 11, 0.9292, 0.9390, -0.0098),
            ((-2/3,-1/3,0,1/3,2/3), "H", 17, 0.9068, 0.8190, 0.0878),
            ((-2/3,-1/3,0,1/3,2/3), "MA", 21, 0.9127, 0.9079, 0.0049),
            ((-2/3,-1/3,0,1/3,2/3), "MB", 20, 0.9070, 0.8916, 0.0153),
            ((-2/3,-1/3,0,1/3,2/3), "LA", 22, 0.9139, 0.9224, -0.0085),
            ((-2/3,-1/3,0,1/3,2/3), "LB", 21, 0.9053, 0.9101, -0.0048),
            ((-1/2,-1/4,0,1/4,1/2), "H", 30, 0.9045, 0.8379, 0.0666),
            ((-1/2,-1/4,0,1/4,1/2), "MA", 35, 0.9034, 0.9005, 0.0029),
            ((-1/2,-1/4,0,1/4,1/2), "MB", 35, 0.9092, 0.9012, 0.008),
            ((-1/2,-1/4,0,1/4,1/2), "LA", 36, 0.9045, 0.9105, -0.006),
            ((-1/2,-1/4,0,1/4,1/2), "LB", 36, 0.9082, 0.9103, -0.0021),
            ((-1/3,-1/6,0,1/6,1/3), "H", 67, 0.9022, 0.8593, 0.0428),
            ((-1/3,-1/6,0,1/6,1/3), "MA", 75, 0.9014, 0.8981, 0.0033),
            ((-1/3,-1/6,0,1/6,1/3), "MB", 75, 0.9042, 0.8998, 0.0044),
            ((-1/3,-1/6,0,1/6,1/3), "LA", 76, 0.9020, 0.9055, -0.0035),
            ((-1/3,-1/6,0,1/6,1/3), "LB", 76, 0.9038, 0.9035, 0.0003),
        ],
    },
    9: {
        "family": "normal",
        "printed_scale": 1,
        "K": 3,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,0,1), "H", 9, 0.9056, 0.8505, 0.055),
            ((-1,0,1), "MA", 10, 0.9165, 0.8803, 0.0362),
            ((-1,0,1), "MB", 9, 0.9243, 0.8519, 0.0724),
            ((-1,0,1), "LA", 12, 0.9077, 0.9494, -0.0416),
            ((-1,0,1), "LB", 12, 0.9224, 0.9503, -0.028),
            ((-2/3,0,2/3), "H", 20, 0.9019, 0.8786, 0.0232),
            ((-2/3,0,2/3), "MA", 21, 0.9096, 0.8996, 0.01),
            ((-2/3,0,2/3), "MB", 20, 0.9125, 0.8795, 0.0329),
            ((-2/3,0,2/3), "LA", 23, 0.9060, 0.9163, -0.0104),
            ((-2/3,0,2/3), "LB", 22, 0.9002, 0.9048, -0.0046),
            ((-1/2,0,1/2), "H", 36, 0.9056, 0.8980, 0.0075),
            ((-1/2,0,1/2), "MA", 36, 0.9021, 0.8974, 0.0047),
            ((-1/2,0,1/2), "MB", 35, 0.9036, 0.8801, 0.0236),
            ((-1/2,0,1/2), "LA", 38, 0.9004, 0.9039, -0.0034),
            ((-1/2,0,1/2), "LB", 38, 0.9051, 0.9045, 0.0006),
            ((-1/3,0,1/3), "H", 80, 0.9019, 0.8962, 0.0056),
            ((-1/3,0,1/3), "MA", 80, 0.9005, 0.8992, 0.0013),
            ((-1/3,0,1/3), "MB", 79, 0.9011, 0.8953, 0.0058),
            ((-1/3,0,1/3), "LA", 83, 0.9035, 0.9019, 0.0016),
            ((-1/3,0,1/3), "LB", 82, 0.9019, 0.9048, -0.0029),
        ],
    },
    10: {
        "family": "normal",
        "printed_scale": 1,
        "K": 5,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,-1/2,0,1/2,1), "H", 8, 0.9102, 0.8368, 0.0735),
            ((-1,-1/2,0,1/2,1), "MA", 9, 0.9145, 0.8965, 0.018),
            ((-1,-1/2,0,1/2,1), "MB", 9, 0.9365, 0.8958, 0.0408),
            ((-1,-1/2,0,1/2,1), "LA", 10, 0.9173, 0.9373, -0.02),
            ((-1,-1/2,0,1/2,1), "LB", 10, 0.9300, 0.9365, -0.0065),
            ((-2/3,-1/3,0,1/3,2/3), "H", 18, 0.9102, 0.8812, 0.0291),
            ((-2/3,-1/3,0,1/3,2/3), "MA", 19, 0.9139, 0.9068, 0.0071),
            ((-2/3,-1/3,0,1/3,2/3), "MB", 18, 0.9075, 0.8880, 0.0195),
            ((-2/3,-1/3,0,1/3,2/3), "LA", 20, 0.9151, 0.9230, -0.0079),
            ((-2/3,-1/3,0,1/3,2/3), "LB", 19, 0.9056, 0.9082, -0.0026),
            ((-1/2,-1/4,0,1/4,1/2), "H", 31, 0.9003, 0.8825, 0.0178),
            ((-1/2,-1/4,0,1/4,1/2), "MA", 32, 0.9027, 0.8982, 0.0045),
            ((-1/2,-1/4,0,1/4,1/2), "MB", 32, 0.9091, 0.8990, 0.0101),
            ((-1/2,-1/4,0,1/4,1/2), "LA", 33, 0.9039, 0.9091, -0.0052),
            ((-1/2,-1/4,0,1/4,1/2), "LB", 33, 0.9080, 0.9070, 0.001),
            ((-1/3,-1/6,0,1/6,1/3), "H", 70, 0.9014, 0.8948, 0.0066),
            ((-1/3,-1/6,0,1/6,1/3), "MA", 71, 0.9026, 0.8993, 0.0033),
            ((-1/3,-1/6,0,1/6,1/3), "MB", 70, 0.9009, 0.8968, 0.0041),
            ((-1/3,-1/6,0,1/6,1/3), "LA", 72, 0.9032, 0.9051, -0.002),
            ((-1/3,-1/6,0,1/6,1/3), "LB", 71, 0.9005, 0.9004, 0.0001),
        ],
    },
    11: {
        "family": "laplace",
        "printed_scale": 1.4142,
        "K": 3,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,0,1), "H", 6, 0.9186, 0.6989, 0.2196),
            ((-1,0,1), "MA", 9, 0.9369, 0.8963, 0.0406),
            ((-1,0,1), "MB", 7, 0.9076, 0.7898, 0.1177),
            ((-1,0,1), "LA", 11, 0.9220, 0.9398, -0.0178),
            ((-1,0,1), "LB", 10, 0.9101, 0.9190, -0.0088),
            ((-2/3,0,2/3), "H", 13, 0.9080, 0.7956, 0.1124),
            ((-2/3,0,2/3), "MA", 16, 0.9071, 0.8910, 0.0161),
            ((-2/3,0,2/3), "MB", 15, 0.9113, 0.8489, 0.0624),
            ((-2/3,0,2/3), "LA", 18, 0.9028, 0.9117, -0.009),
            ((-2/3,0,2/3), "LB", 18, 0.9127, 0.9104, 0.0023),
            ((-1/2,0,1/2), "H", 23, 0.9066, 0.8294, 0.0773),
            ((-1/2,0,1/2), "MA", 26, 0.9003, 0.8805, 0.0198),
            ((-1/2,0,1/2), "MB", 25, 0.9027, 0.8695, 0.0332),
            ((-1/2,0,1/2), "LA", 29, 0.9092, 0.9172, -0.008),
            ((-1/2,0,1/2), "LB", 28, 0.9048, 0.9078, -0.003),
            ((-1/3,0,1/3), "H", 51, 0.9023, 0.8642, 0.0381),
            ((-1/3,0,1/3), "MA", 55, 0.9012, 0.8923, 0.009),
            ((-1/3,0,1/3), "MB", 54, 0.9022, 0.8881, 0.0141),
            ((-1/3,0,1/3), "LA", 57, 0.9002, 0.9058, -0.0056),
            ((-1/3,0,1/3), "LB", 57, 0.9033, 0.9057, -0.0024),
        ],
    },
    12: {
        "family": "laplace",
        "printed_scale": 1.4142,
        "K": 5,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,-1/2,0,1/2,1), "H", 5, 0.9045, 0.6231, 0.2814),
            ((-1,-1/2,0,1/2,1), "MA", 8, 0.9399, 0.9132, 0.0267),
            ((-1,-1/2,0,1/2,1), "MB", 7, 0.9253, 0.8590, 0.0663),
            ((-1,-1/2,0,1/2,1), "LA", 9, 0.9386, 0.9444, -0.0058),
            ((-1,-1/2,0,1/2,1), "LB", 8, 0.9182, 0.9121, 0.0061),
            ((-2/3,-1/3,0,1/3,2/3), "H", 12, 0.9237, 0.8194, 0.1042),
            ((-2/3,-1/3,0,1/3,2/3), "MA", 14, 0.9071, 0.8916, 0.0155),
            ((-2/3,-1/3,0,1/3,2/3), "MB", 14, 0.9218, 0.8944, 0.0274),
            ((-2/3,-1/3,0,1/3,2/3), "LA", 15, 0.9096, 0.9130, -0.0034),
            ((-2/3,-1/3,0,1/3,2/3), "LB", 15, 0.9184, 0.9133, 0.0051),
            ((-1/2,-1/4,0,1/4,1/2), "H", 20, 0.9045, 0.8330, 0.0716),
            ((-1/2,-1/4,0,1/4,1/2), "MA", 23, 0.9047, 0.8942, 0.0105),
            ((-1/2,-1/4,0,1/4,1/2), "MB", 23, 0.9136, 0.8930, 0.0206),
            ((-1/2,-1/4,0,1/4,1/2), "LA", 24, 0.9063, 0.9082, -0.0019),
            ((-1/2,-1/4,0,1/4,1/2), "LB", 24, 0.9118, 0.9086, 0.0032),
            ((-1/3,-1/6,0,1/6,1/3), "H", 45, 0.9045, 0.8710, 0.0336),
            ((-1/3,-1/6,0,1/6,1/3), "MA", 48, 0.9012, 0.8963, 0.0049),
            ((-1/3,-1/6,0,1/6,1/3), "MB", 48, 0.9055, 0.8944, 0.0111),
            ((-1/3,-1/6,0,1/6,1/3), "LA", 49, 0.9021, 0.9030, -0.0009),
            ((-1/3,-1/6,0,1/6,1/3), "LB", 49, 0.9048, 0.9040, 0.0008),
        ],
    },
    13: {
        "family": "exponential",
        "printed_scale": 1,
        "K": 3,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,0,1), "H", 3, 0.9186, 0.2670, 0.6516),
            ((-1,0,1), "MA", 8, 0.9366, 0.8779, 0.0587),
            ((-1,0,1), "MB", 6, 0.9029, 0.7327, 0.1702),
            ((-1,0,1), "LA", 10, 0.9201, 0.9450, -0.0249),
            ((-1,0,1), "LB", 9, 0.9067, 0.9242, -0.0175),
            ((-2/3,0,2/3), "H", 7, 0.9280, 0.5739, 0.3542),
            ((-2/3,0,2/3), "MA", 13, 0.9041, 0.8699, 0.0342),
            ((-2/3,0,2/3), "MB", 12, 0.9099, 0.8540, 0.0558),
            ((-2/3,0,2/3), "LA", 16, 0.9196, 0.9427, -0.0231),
            ((-2/3,0,2/3), "LB", 15, 0.9118, 0.9113, 0.0005),
            ((-1/2,0,1/2), "H", 12, 0.9186, 0.6702, 0.2483),
            ((-1/2,0,1/2), "MA", 20, 0.9003, 0.8803, 0.0201),
            ((-1/2,0,1/2), "MB", 19, 0.9036, 0.8672, 0.0364),
            ((-1/2,0,1/2), "LA", 23, 0.9116, 0.9179, -0.0063),
            ((-1/2,0,1/2), "LB", 22, 0.9060, 0.9061, -0.0001),
            ((-1/3,0,1/3), "H", 26, 0.9080, 0.7201, 0.1879),
            ((-1/3,0,1/3), "MA", 39, 0.9034, 0.8938, 0.0095),
            ((-1/3,0,1/3), "MB", 38, 0.9048, 0.8782, 0.0266),
            ((-1/3,0,1/3), "LA", 41, 0.9018, 0.9084, -0.0067),
            ((-1/3,0,1/3), "LB", 41, 0.9061, 0.9097, -0.0037),
        ],
    },
    14: {
        "family": "exponential",
        "printed_scale": 1,
        "K": 5,
        "rows": [
            # (shift pattern, method, B, estimated power, simulated power, difference)
            ((-1,-1/2,0,1/2,1), "H", 3, 0.9520, 0.2604, 0.6916),
            ((-1,-1/2,0,1/2,1), "MA", 7, 0.9438, 0.9076, 0.0362),
            ((-1,-1/2,0,1/2,1), "MB", 6, 0.9269, 0.8424, 0.0845),
            ((-1,-1/2,0,1/2,1), "LA", 8, 0.9416, 0.9478, -0.0063),
            ((-1,-1/2,0,1/2,1), "LB", 7, 0.9185, 0.9074, 0.0111),
            ((-2/3,-1/3,0,1/3,2/3), "H", 6, 0.9237, 0.5158, 0.4078),
            ((-2/3,-1/3,0,1/3,2/3), "MA", 11, 0.9022, 0.8830, 0.0192),
            ((-2/3,-1/3,0,1/3,2/3), "MB", 11, 0.9217, 0.8809, 0.0407),
            ((-2/3,-1/3,0,1/3,2/3), "LA", 12, 0.9060, 0.9125, -0.0065),
            ((-2/3,-1/3,0,1/3,2/3), "LB", 12, 0.9174, 0.9115, 0.0059),
            ((-1/2,-1/4,0,1/4,1/2), "H", 10, 0.9045, 0.6023, 0.3022),
            ((-1/2,-1/4,0,1/4,1/2), "MA", 17, 0.9005, 0.8849, 0.0156),
            ((-1/2,-1/4,0,1/4,1/2), "MB", 17, 0.9130, 0.8856, 0.0274),
            ((-1/2,-1/4,0,1/4,1/2), "LA", 18, 0.9031, 0.9078, -0.0047),
            ((-1/2,-1/4,0,1/4,1/2), "LB", 18, 0.9107, 0.9067, 0.004),
            ((-1/3,-1/6,0,1/6,1/3), "H", 23, 0.9113, 0.7310, 0.1804),
            ((-1/3,-1/6,0,1/6,1/3), "MA", 33, 0.9018, 0.8938, 0.008),
            ((-1/3,-1/6,0,1/6,1/3), "MB", 33, 0.9081, 0.8953, 0.0128),
            ((-1/3,-1/6,0,1/6,1/3), "LA", 34, 0.9031, 0.9057, -0.0027),
            ((-1/3,-1/6,0,1/6,1/3), "LB", 34, 0.9070, 0.9058, 0.0012),
        ],
    },
}

# application: minimum blocks of the LB procedure at level 0.05
APPLICATION = {
    "shifts": (-1.3096, -1.0055, 0.0993, 0.6276, 1.5882),
    "method": "LB",
    "alpha": 0.05,
    "results": {
        # target power: {family: (B, estimated power)}
        0.80: {"uniform": (5, 0.8878), "normal": (4, 0.8070), "laplace": (4, 0.8475), "exponential": (4, 0.8737)},
        0.90: {"uniform": (6, 0.9466), "normal": (5, 0.9066), "laplace": (5, 0.9340), "exponential": (5, 0.9500)},
    },
}

WORKED_EXAMPLE = {
    "rank_sums": (5, 5, 9, 14, 12),
    "K": 5,
    "B": 3,
    "T": 8.8,
    "F_R": 5.5,
    "F_M": 5.5,
    "F_L": 3.6667,
    "p_values": {"chisq": 0.0663, "R": 0.0199, "M": 0.0301, "L": 0.0357},
}
