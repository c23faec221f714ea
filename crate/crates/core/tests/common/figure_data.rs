//! Coordinates read off the published bound plots.

pub const FIG1_ASYMPTOTIC: &[(f64, f64)] = &[
    (2.0, 1.57048),
    (3.0, 1.4173),
    (4.0, 1.34746),
    (5.0, 1.31129),
    (6.0, 1.29139),
    (7.0, 1.28019),
    (8.0, 1.2739),
    (9.0, 1.27045),
    (10.0, 1.26868),
    (11.0, 1.2679),
    (12.0, 1.26769),
    (13.0, 1.2678),
    (14.0, 1.2681),
    (15.0, 1.26842),
    (16.0, 1.26856),
    (17.0, 1.26853),
    (18.0, 1.26836),
    (19.0, 1.26808),
    (20.0, 1.2677),
    (21.0, 1.26725),
    (22.0, 1.26674),
    (23.0, 1.26619),
    (24.0, 1.2656),
    (25.0, 1.26498),
    (26.0, 1.26434),
    (27.0, 1.26369),
    (28.0, 1.26303),
    (29.0, 1.26236),
    (30.0, 1.26168),
    (31.0, 1.26101),
    (32.0, 1.26034),
    (33.0, 1.25967),
    (34.0, 1.259),
    (35.0, 1.25834),
    (36.0, 1.25769),
    (37.0, 1.25704),
    (38.0, 1.2564),
    (39.0, 1.25577),
    (40.0, 1.25515),
    (41.0, 1.25453),
    (42.0, 1.25392),
    (43.0, 1.25332),
    (44.0, 1.25273),
    (45.0, 1.25215),
    (46.0, 1.25158),
    (47.0, 1.25101),
    (48.0, 1.25045),
    (49.0, 1.2499),
    (50.0, 1.24936),
    (51.0, 1.24883),
    (52.0, 1.24831),
    (53.0, 1.24779),
    (54.0, 1.24728),
    (55.0, 1.24678),
    (56.0, 1.24628),
    (57.0, 1.2458),
    (58.0, 1.24532),
    (59.0, 1.24484),
    (60.0, 1.24438),
    (61.0, 1.24392),
    (62.0, 1.24346),
    (63.0, 1.24302),
    (64.0, 1.24258),
    (65.0, 1.24214),
    (66.0, 1.24171),
    (67.0, 1.24129),
    (68.0, 1.24087),
    (69.0, 1.24046),
    (70.0, 1.24006),
    (71.0, 1.23966),
    (72.0, 1.23926),
    (73.0, 1.23887),
    (74.0, 1.23849),
    (75.0, 1.23811),
    (76.0, 1.23773),
    (77.0, 1.23736),
    (78.0, 1.237),
    (79.0, 1.23664),
    (80.0, 1.23628),
    (81.0, 1.23593),
    (82.0, 1.23558),
    (83.0, 1.23524),
    (84.0, 1.2349),
    (85.0, 1.23456),
    (86.0, 1.23423),
    (87.0, 1.2339),
    (88.0, 1.23358),
    (89.0, 1.23326),
    (90.0, 1.23294),
    (91.0, 1.23263),
    (92.0, 1.23232),
    (93.0, 1.23201),
    (94.0, 1.23171),
    (95.0, 1.23141),
    (96.0, 1.23112),
    (97.0, 1.23082),
    (98.0, 1.23053),
    (99.0, 1.23025),
    (100.0, 1.22996),
    (101.0, 1.22968),
    (102.0, 1.2294),
    (103.0, 1.22913),
    (104.0, 1.22886),
    (105.0, 1.22859),
];

pub const FIG1_SMALL_N: &[(f64, f64)] = &[
    (2.0, 1.34159),
    (3.0, 1.35384),
    (4.0, 1.34601),
    (5.0, 1.31129),
    (6.0, 1.29139),
    (7.0, 1.28019),
    (8.0, 1.2739),
    (9.0, 1.27045),
    (10.0, 1.26868),
    (11.0, 1.2679),
    (12.0, 1.26769),
    (13.0, 1.2678),
    (14.0, 1.2681),
    (15.0, 1.26848),
    (16.0, 1.2689),
    (17.0, 1.26931),
    (18.0, 1.26972),
    (19.0, 1.27011),
    (20.0, 1.27047),
    (21.0, 1.2708),
    (22.0, 1.27111),
    (23.0, 1.2714),
    (24.0, 1.27166),
    (25.0, 1.27191),
    (26.0, 1.27213),
    (27.0, 1.27234),
    (28.0, 1.27254),
    (29.0, 1.27272),
    (30.0, 1.27289),
    (31.0, 1.27305),
    (32.0, 1.2732),
    (33.0, 1.27334),
    (34.0, 1.27347),
    (35.0, 1.27359),
    (36.0, 1.27371),
    (37.0, 1.27382),
    (38.0, 1.27392),
    (39.0, 1.27402),
    (40.0, 1.27411),
    (41.0, 1.2742),
    (42.0, 1.27429),
    (43.0, 1.27437),
    (44.0, 1.27445),
    (45.0, 1.27452),
    (46.0, 1.27459),
    (47.0, 1.27466),
    (48.0, 1.27472),
    (49.0, 1.27479),
    (50.0, 1.27484),
    (51.0, 1.2749),
    (52.0, 1.27496),
    (53.0, 1.27501),
    (54.0, 1.27506),
    (55.0, 1.27511),
    (56.0, 1.27516),
    (57.0, 1.2752),
    (58.0, 1.27525),
    (59.0, 1.27529),
    (60.0, 1.27533),
    (61.0, 1.27537),
    (62.0, 1.27541),
    (63.0, 1.27544),
    (64.0, 1.27548),
    (65.0, 1.27551),
    (66.0, 1.27555),
    (67.0, 1.27558),
    (68.0, 1.27561),
    (69.0, 1.27564),
    (70.0, 1.27567),
    (71.0, 1.2757),
    (72.0, 1.27573),
    (73.0, 1.27576),
    (74.0, 1.27579),
    (75.0, 1.27581),
    (76.0, 1.27584),
    (77.0, 1.27586),
    (78.0, 1.27589),
    (79.0, 1.27591),
    (80.0, 1.27593),
    (81.0, 1.27595),
    (82.0, 1.27598),
    (83.0, 1.276),
    (84.0, 1.27602),
    (85.0, 1.27604),
    (86.0, 1.27606),
    (87.0, 1.27608),
    (88.0, 1.2761),
    (89.0, 1.27611),
    (90.0, 1.27613),
    (91.0, 1.27615),
    (92.0, 1.27617),
    (93.0, 1.27618),
    (94.0, 1.2762),
    (95.0, 1.27622),
    (96.0, 1.27623),
    (97.0, 1.27625),
    (98.0, 1.27626),
    (99.0, 1.27628),
    (100.0, 1.27629),
    (101.0, 1.27631),
    (102.0, 1.27632),
    (103.0, 1.27633),
    (104.0, 1.27635),
    (105.0, 1.27636),
];

pub const FIG2_UPPER_BEST: &[(f64, f64)] = &[
    (2.0, 1.34159),
    (3.0, 1.35384),
    (4.0, 1.34601),
    (5.0, 1.31129),
    (6.0, 1.29139),
    (7.0, 1.28019),
    (8.0, 1.2739),
    (9.0, 1.27045),
    (10.0, 1.26868),
    (11.0, 1.2679),
    (12.0, 1.26769),
    (13.0, 1.2678),
    (14.0, 1.2681),
    (15.0, 1.26842),
    (16.0, 1.26856),
    (17.0, 1.26853),
    (18.0, 1.26836),
    (19.0, 1.26808),
    (20.0, 1.2677),
    (21.0, 1.26725),
    (22.0, 1.26674),
    (23.0, 1.26619),
    (24.0, 1.2656),
    (25.0, 1.26498),
    (26.0, 1.26434),
    (27.0, 1.26369),
    (28.0, 1.26303),
    (29.0, 1.26236),
    (30.0, 1.26168),
    (31.0, 1.26101),
    (32.0, 1.26034),
    (33.0, 1.25967),
    (34.0, 1.259),
    (35.0, 1.25834),
    (36.0, 1.25769),
    (37.0, 1.25704),
    (38.0, 1.2564),
    (39.0, 1.25577),
    (40.0, 1.25515),
    (41.0, 1.25453),
    (42.0, 1.25392),
    (43.0, 1.25332),
    (44.0, 1.25273),
    (45.0, 1.25215),
    (46.0, 1.25158),
    (47.0, 1.25101),
    (48.0, 1.25045),
    (49.0, 1.2499),
    (50.0, 1.24936),
    (51.0, 1.24883),
    (52.0, 1.24831),
    (53.0, 1.24779),
    (54.0, 1.24728),
    (55.0, 1.24678),
    (56.0, 1.24628),
    (57.0, 1.2458),
    (58.0, 1.24532),
    (59.0, 1.24484),
    (60.0, 1.24438),
    (61.0, 1.24392),
    (62.0, 1.24346),
    (63.0, 1.24302),
    (64.0, 1.24258),
    (65.0, 1.24214),
    (66.0, 1.24171),
    (67.0, 1.24129),
    (68.0, 1.24087),
    (69.0, 1.24046),
    (70.0, 1.24006),
    (71.0, 1.23966),
    (72.0, 1.23926),
    (73.0, 1.23887),
    (74.0, 1.23849),
    (75.0, 1.23811),
    (76.0, 1.23773),
    (77.0, 1.23736),
    (78.0, 1.237),
    (79.0, 1.23664),
    (80.0, 1.23628),
    (81.0, 1.23593),
    (82.0, 1.23558),
    (83.0, 1.23524),
    (84.0, 1.2349),
    (85.0, 1.23456),
    (86.0, 1.23423),
    (87.0, 1.2339),
    (88.0, 1.23358),
    (89.0, 1.23326),
    (90.0, 1.23294),
    (91.0, 1.23263),
    (92.0, 1.23232),
    (93.0, 1.23201),
    (94.0, 1.23171),
    (95.0, 1.23141),
    (96.0, 1.23112),
    (97.0, 1.23082),
    (98.0, 1.23053),
    (99.0, 1.23025),
    (100.0, 1.22996),
    (101.0, 1.22968),
    (102.0, 1.2294),
    (103.0, 1.22913),
    (104.0, 1.22886),
    (105.0, 1.22859),
];

pub const FIG2_LOWER_EXPONENTIAL: &[(f64, f64)] = &[
    (2.0, 1.0),
    (3.0, 1.03974),
    (4.0, 1.13595),
    (5.0, 1.1859),
    (6.0, 1.21487),
    (7.0, 1.23291),
    (8.0, 1.24467),
    (9.0, 1.25256),
    (10.0, 1.25797),
    (11.0, 1.2617),
    (12.0, 1.26426),
    (13.0, 1.266),
    (14.0, 1.26713),
    (15.0, 1.26782),
    (16.0, 1.26818),
    (17.0, 1.26829),
    (18.0, 1.26821),
    (19.0, 1.26798),
    (20.0, 1.26764),
    (21.0, 1.26721),
    (22.0, 1.26672),
    (23.0, 1.26617),
    (24.0, 1.26559),
    (25.0, 1.26497),
    (26.0, 1.26434),
    (27.0, 1.26369),
    (28.0, 1.26303),
    (29.0, 1.26236),
    (30.0, 1.26168),
    (31.0, 1.26101),
    (32.0, 1.26034),
    (33.0, 1.25967),
    (34.0, 1.259),
    (35.0, 1.25834),
    (36.0, 1.25769),
    (37.0, 1.25704),
    (38.0, 1.2564),
    (39.0, 1.25577),
    (40.0, 1.25515),
    (41.0, 1.25453),
    (42.0, 1.25392),
    (43.0, 1.25332),
    (44.0, 1.25273),
    (45.0, 1.25215),
    (46.0, 1.25158),
    (47.0, 1.25101),
    (48.0, 1.25045),
    (49.0, 1.2499),
    (50.0, 1.24936),
    (51.0, 1.24883),
    (52.0, 1.24831),
    (53.0, 1.24779),
    (54.0, 1.24728),
    (55.0, 1.24678),
    (56.0, 1.24628),
    (57.0, 1.2458),
    (58.0, 1.24532),
    (59.0, 1.24484),
    (60.0, 1.24438),
    (61.0, 1.24392),
    (62.0, 1.24346),
    (63.0, 1.24302),
    (64.0, 1.24258),
    (65.0, 1.24214),
    (66.0, 1.24171),
    (67.0, 1.24129),
    (68.0, 1.24087),
    (69.0, 1.24046),
    (70.0, 1.24006),
    (71.0, 1.23966),
    (72.0, 1.23926),
    (73.0, 1.23887),
    (74.0, 1.23849),
    (75.0, 1.23811),
    (76.0, 1.23773),
    (77.0, 1.23736),
    (78.0, 1.237),
    (79.0, 1.23664),
    (80.0, 1.23628),
    (81.0, 1.23593),
    (82.0, 1.23558),
    (83.0, 1.23524),
    (84.0, 1.2349),
    (85.0, 1.23456),
    (86.0, 1.23423),
    (87.0, 1.2339),
    (88.0, 1.23358),
    (89.0, 1.23326),
    (90.0, 1.23294),
    (91.0, 1.23263),
    (92.0, 1.23232),
    (93.0, 1.23201),
    (94.0, 1.23171),
    (95.0, 1.23141),
    (96.0, 1.23112),
    (97.0, 1.23082),
    (98.0, 1.23053),
    (99.0, 1.23025),
    (100.0, 1.22996),
    (101.0, 1.22968),
    (102.0, 1.2294),
    (103.0, 1.22913),
    (104.0, 1.22886),
    (105.0, 1.22859),
];

pub const FIG2_PRIOR_INDEPENDENT: &[(f64, f64)] = &[
    (2.0, 2.05371),
    (3.0, 1.70722),
    (4.0, 1.52147),
    (5.0, 1.41642),
    (6.0, 1.35529),
    (7.0, 1.31921),
    (8.0, 1.29782),
    (9.0, 1.28517),
    (10.0, 1.27776),
    (11.0, 1.27351),
    (12.0, 1.27117),
    (13.0, 1.26997),
    (14.0, 1.26945),
    (15.0, 1.26926),
    (16.0, 1.26909),
    (17.0, 1.26886),
    (18.0, 1.26857),
    (19.0, 1.26821),
    (20.0, 1.26778),
    (21.0, 1.2673),
    (22.0, 1.26678),
    (23.0, 1.26621),
    (24.0, 1.26561),
    (25.0, 1.26499),
    (26.0, 1.26435),
    (27.0, 1.26369),
    (28.0, 1.26303),
    (29.0, 1.26236),
    (30.0, 1.26169),
    (31.0, 1.26101),
    (32.0, 1.26034),
    (33.0, 1.25967),
    (34.0, 1.259),
    (35.0, 1.25834),
    (36.0, 1.25769),
    (37.0, 1.25704),
    (38.0, 1.2564),
    (39.0, 1.25577),
    (40.0, 1.25515),
    (41.0, 1.25453),
    (42.0, 1.25392),
    (43.0, 1.25332),
    (44.0, 1.25273),
    (45.0, 1.25215),
    (46.0, 1.25158),
    (47.0, 1.25101),
    (48.0, 1.25045),
    (49.0, 1.2499),
    (50.0, 1.24936),
    (51.0, 1.24883),
    (52.0, 1.24831),
    (53.0, 1.24779),
    (54.0, 1.24728),
    (55.0, 1.24678),
    (56.0, 1.24628),
    (57.0, 1.2458),
    (58.0, 1.24532),
    (59.0, 1.24484),
    (60.0, 1.24438),
    (61.0, 1.24392),
    (62.0, 1.24346),
    (63.0, 1.24302),
    (64.0, 1.24258),
    (65.0, 1.24214),
    (66.0, 1.24171),
    (67.0, 1.24129),
    (68.0, 1.24087),
    (69.0, 1.24046),
    (70.0, 1.24006),
    (71.0, 1.23966),
    (72.0, 1.23926),
    (73.0, 1.23887),
    (74.0, 1.23849),
    (75.0, 1.23811),
    (76.0, 1.23773),
    (77.0, 1.23736),
    (78.0, 1.237),
    (79.0, 1.23664),
    (80.0, 1.23628),
    (81.0, 1.23593),
    (82.0, 1.23558),
    (83.0, 1.23524),
    (84.0, 1.2349),
    (85.0, 1.23456),
    (86.0, 1.23423),
    (87.0, 1.2339),
    (88.0, 1.23358),
    (89.0, 1.23326),
    (90.0, 1.23294),
    (91.0, 1.23263),
    (92.0, 1.23232),
    (93.0, 1.23201),
    (94.0, 1.23171),
    (95.0, 1.23141),
    (96.0, 1.23112),
    (97.0, 1.23082),
    (98.0, 1.23053),
    (99.0, 1.23025),
    (100.0, 1.22996),
    (101.0, 1.22968),
    (102.0, 1.2294),
    (103.0, 1.22913),
    (104.0, 1.22886),
    (105.0, 1.22859),
];

pub const FIG3_N5_LOWER: &[(f64, f64)] = &[
    (0.001, 1.00118),
    (0.01, 1.01094),
    (0.02, 1.02112),
    (0.03, 1.03091),
    (0.04, 1.04041),
    (0.05, 1.04967),
    (0.06, 1.05874),
    (0.07, 1.06764),
    (0.08, 1.07638),
    (0.09, 1.08497),
    (0.1, 1.09342),
    (0.11, 1.10174),
    (0.12, 1.10994),
    (0.13, 1.11801),
    (0.14, 1.12597),
    (0.15, 1.13381),
    (0.16, 1.14154),
    (0.17, 1.14916),
    (0.18, 1.15666),
    (0.19, 1.16405),
    (0.2, 1.17133),
    (0.21, 1.17851),
    (0.22, 1.18557),
    (0.23, 1.19252),
    (0.24, 1.19935),
    (0.25, 1.20607),
    (0.26, 1.21268),
    (0.27, 1.21918),
    (0.28, 1.22555),
    (0.29, 1.23181),
    (0.3, 1.23794),
    (0.31, 1.24396),
    (0.32, 1.24984),
    (0.33, 1.25561),
    (0.34, 1.26124),
    (0.35, 1.26674),
    (0.36, 1.2721),
    (0.37, 1.27733),
    (0.38, 1.28242),
    (0.39, 1.28737),
    (0.4, 1.29217),
    (0.41, 1.29683),
    (0.42, 1.30133),
    (0.43, 1.30568),
    (0.44, 1.30986),
    (0.45, 1.31389),
    (0.46, 1.31775),
    (0.47, 1.32144),
    (0.48, 1.32495),
    (0.49, 1.32829),
    (0.5, 1.33144),
    (0.51, 1.3344),
    (0.52, 1.33717),
    (0.53, 1.33975),
    (0.54, 1.34212),
    (0.55, 1.34447),
    (0.56, 1.34683),
    (0.57, 1.34923),
    (0.58, 1.35165),
    (0.59, 1.3541),
    (0.6, 1.35658),
    (0.61, 1.35909),
    (0.62, 1.36163),
    (0.63, 1.36421),
    (0.64, 1.36681),
    (0.65, 1.36944),
    (0.66, 1.37211),
    (0.67, 1.3748),
    (0.68, 1.37753),
    (0.69, 1.3803),
    (0.7, 1.3831),
    (0.71, 1.38594),
    (0.72, 1.38881),
    (0.73, 1.39172),
    (0.74, 1.39466),
    (0.75, 1.39765),
    (0.76, 1.40067),
    (0.77, 1.40373),
    (0.78, 1.40684),
    (0.79, 1.40998),
    (0.8, 1.41317),
    (0.81, 1.4164),
    (0.82, 1.41968),
    (0.83, 1.423),
    (0.84, 1.42636),
    (0.85, 1.42978),
    (0.86, 1.43324),
    (0.87, 1.43675),
    (0.88, 1.44031),
    (0.89, 1.44392),
    (0.9, 1.44758),
    (0.91, 1.4513),
    (0.92, 1.45507),
    (0.93, 1.4589),
    (0.94, 1.46279),
    (0.95, 1.46673),
    (0.96, 1.47074),
    (0.97, 1.4748),
    (0.98, 1.47893),
    (0.99, 1.48313),
    (1.0, 1.48739),
];

pub const FIG3_N5_UPPER: &[(f64, f64)] = &[
    (0.001, 1.31148),
    (0.01, 1.3132),
    (0.02, 1.31513),
    (0.03, 1.31708),
    (0.04, 1.31904),
    (0.05, 1.32103),
    (0.06, 1.32304),
    (0.07, 1.32507),
    (0.08, 1.32712),
    (0.09, 1.32919),
    (0.1, 1.33128),
    (0.11, 1.33339),
    (0.12, 1.33552),
    (0.13, 1.33768),
    (0.14, 1.33985),
    (0.15, 1.34205),
    (0.16, 1.34428),
    (0.17, 1.34652),
    (0.18, 1.34879),
    (0.19, 1.35109),
    (0.2, 1.35341),
    (0.21, 1.35575),
    (0.22, 1.35812),
    (0.23, 1.36052),
    (0.24, 1.36294),
    (0.25, 1.36539),
    (0.26, 1.36786),
    (0.27, 1.37036),
    (0.28, 1.3729),
    (0.29, 1.37545),
    (0.3, 1.37804),
    (0.31, 1.38066),
    (0.32, 1.38331),
    (0.33, 1.38598),
    (0.34, 1.38869),
    (0.35, 1.39143),
    (0.36, 1.39421),
    (0.37, 1.39701),
    (0.38, 1.39985),
    (0.39, 1.40272),
    (0.4, 1.40563),
    (0.41, 1.40857),
    (0.42, 1.41155),
    (0.43, 1.41456),
    (0.44, 1.41761),
    (0.45, 1.4207),
    (0.46, 1.42382),
    (0.47, 1.42699),
    (0.48, 1.4302),
    (0.49, 1.43344),
    (0.5, 1.43673),
    (0.51, 1.44006),
    (0.52, 1.44344),
    (0.53, 1.44686),
    (0.54, 1.45032),
    (0.55, 1.45383),
    (0.56, 1.45739),
    (0.57, 1.461),
    (0.58, 1.46465),
    (0.59, 1.46836),
    (0.6, 1.47211),
    (0.61, 1.47592),
    (0.62, 1.47978),
    (0.63, 1.4837),
    (0.64, 1.48768),
    (0.65, 1.49171),
    (0.66, 1.4958),
    (0.67, 1.49995),
    (0.68, 1.50416),
    (0.69, 1.50844),
    (0.7, 1.51278),
    (0.71, 1.51719),
    (0.72, 1.52167),
    (0.73, 1.52621),
    (0.74, 1.53083),
    (0.75, 1.53553),
    (0.76, 1.5403),
    (0.77, 1.54515),
    (0.78, 1.55008),
    (0.79, 1.5551),
    (0.8, 1.5602),
    (0.81, 1.56539),
    (0.82, 1.57068),
    (0.83, 1.57605),
    (0.84, 1.58153),
    (0.85, 1.58711),
    (0.86, 1.5928),
    (0.87, 1.5986),
    (0.88, 1.60451),
    (0.89, 1.61055),
    (0.9, 1.61671),
    (0.91, 1.623),
    (0.92, 1.62944),
    (0.93, 1.63602),
    (0.94, 1.64276),
    (0.95, 1.64966),
    (0.96, 1.65675),
    (0.97, 1.66404),
    (0.98, 1.67155),
    (0.99, 1.67931),
    (1.0, 1.68739),
];

pub const FIG3_N20_LOWER: &[(f64, f64)] = &[
    (0.001, 1.0017),
    (0.01, 1.01478),
    (0.02, 1.0279),
    (0.03, 1.04027),
    (0.04, 1.05211),
    (0.05, 1.06354),
    (0.06, 1.07463),
    (0.07, 1.08542),
    (0.08, 1.09594),
    (0.09, 1.10622),
    (0.1, 1.11627),
    (0.11, 1.12612),
    (0.12, 1.13576),
    (0.13, 1.14521),
    (0.14, 1.15447),
    (0.15, 1.16356),
    (0.16, 1.17247),
    (0.17, 1.18122),
    (0.18, 1.18979),
    (0.19, 1.1982),
    (0.2, 1.20645),
    (0.21, 1.21454),
    (0.22, 1.22246),
    (0.23, 1.23023),
    (0.24, 1.23784),
    (0.25, 1.24528),
    (0.26, 1.25257),
    (0.27, 1.25969),
    (0.28, 1.26665),
    (0.29, 1.27345),
    (0.3, 1.28009),
    (0.31, 1.28656),
    (0.32, 1.29286),
    (0.33, 1.299),
    (0.34, 1.30497),
    (0.35, 1.31076),
    (0.36, 1.31638),
    (0.37, 1.32183),
    (0.38, 1.32709),
    (0.39, 1.33218),
    (0.4, 1.33708),
    (0.41, 1.34179),
    (0.42, 1.34631),
    (0.43, 1.35064),
    (0.44, 1.35478),
    (0.45, 1.35872),
    (0.46, 1.36245),
    (0.47, 1.36598),
    (0.48, 1.36929),
    (0.49, 1.3724),
    (0.5, 1.37528),
    (0.51, 1.37799),
    (0.52, 1.3807),
    (0.53, 1.38344),
    (0.54, 1.38622),
    (0.55, 1.38902),
    (0.56, 1.39186),
    (0.57, 1.39473),
    (0.58, 1.39763),
    (0.59, 1.40056),
    (0.6, 1.40353),
    (0.61, 1.40653),
    (0.62, 1.40957),
    (0.63, 1.41264),
    (0.64, 1.41575),
    (0.65, 1.41889),
    (0.66, 1.42207),
    (0.67, 1.42529),
    (0.68, 1.42855),
    (0.69, 1.43185),
    (0.7, 1.43519),
    (0.71, 1.43857),
    (0.72, 1.442),
    (0.73, 1.44546),
    (0.74, 1.44897),
    (0.75, 1.45252),
    (0.76, 1.45612),
    (0.77, 1.45977),
    (0.78, 1.46346),
    (0.79, 1.4672),
    (0.8, 1.47098),
    (0.81, 1.47482),
    (0.82, 1.47871),
    (0.83, 1.48265),
    (0.84, 1.48665),
    (0.85, 1.4907),
    (0.86, 1.4948),
    (0.87, 1.49896),
    (0.88, 1.50318),
    (0.89, 1.50746),
    (0.9, 1.5118),
    (0.91, 1.5162),
    (0.92, 1.52066),
    (0.93, 1.52519),
    (0.94, 1.52978),
    (0.95, 1.53444),
    (0.96, 1.53917),
    (0.97, 1.54397),
    (0.98, 1.54884),
    (0.99, 1.55379),
    (1.0, 1.55881),
];

pub const FIG3_N20_UPPER: &[(f64, f64)] = &[
    (0.001, 1.2679),
    (0.01, 1.26971),
    (0.02, 1.27171),
    (0.03, 1.2737),
    (0.04, 1.27569),
    (0.05, 1.27768),
    (0.06, 1.27965),
    (0.07, 1.28162),
    (0.08, 1.28358),
    (0.09, 1.28553),
    (0.1, 1.28747),
    (0.11, 1.28939),
    (0.12, 1.2913),
    (0.13, 1.2932),
    (0.14, 1.29508),
    (0.15, 1.29696),
    (0.16, 1.29886),
    (0.17, 1.30077),
    (0.18, 1.30271),
    (0.19, 1.30466),
    (0.2, 1.30664),
    (0.21, 1.30863),
    (0.22, 1.31064),
    (0.23, 1.31267),
    (0.24, 1.31472),
    (0.25, 1.31679),
    (0.26, 1.31888),
    (0.27, 1.321),
    (0.28, 1.32313),
    (0.29, 1.32529),
    (0.3, 1.32747),
    (0.31, 1.32967),
    (0.32, 1.33189),
    (0.33, 1.33414),
    (0.34, 1.33641),
    (0.35, 1.3387),
    (0.36, 1.34102),
    (0.37, 1.34336),
    (0.38, 1.34573),
    (0.39, 1.34813),
    (0.4, 1.35055),
    (0.41, 1.353),
    (0.42, 1.35548),
    (0.43, 1.35798),
    (0.44, 1.36052),
    (0.45, 1.36308),
    (0.46, 1.36567),
    (0.47, 1.3683),
    (0.48, 1.37096),
    (0.49, 1.37364),
    (0.5, 1.37637),
    (0.51, 1.37912),
    (0.52, 1.38191),
    (0.53, 1.38474),
    (0.54, 1.3876),
    (0.55, 1.3905),
    (0.56, 1.39344),
    (0.57, 1.39642),
    (0.58, 1.39944),
    (0.59, 1.40251),
    (0.6, 1.40562),
    (0.61, 1.40877),
    (0.62, 1.41197),
    (0.63, 1.41522),
    (0.64, 1.41852),
    (0.65, 1.42187),
    (0.66, 1.42528),
    (0.67, 1.42874),
    (0.68, 1.43226),
    (0.69, 1.43584),
    (0.7, 1.43949),
    (0.71, 1.4432),
    (0.72, 1.44699),
    (0.73, 1.45085),
    (0.74, 1.45478),
    (0.75, 1.4588),
    (0.76, 1.4629),
    (0.77, 1.46709),
    (0.78, 1.47137),
    (0.79, 1.47576),
    (0.8, 1.48025),
    (0.81, 1.48485),
    (0.82, 1.48958),
    (0.83, 1.49443),
    (0.84, 1.49941),
    (0.85, 1.50454),
    (0.86, 1.50982),
    (0.87, 1.51527),
    (0.88, 1.52089),
    (0.89, 1.5267),
    (0.9, 1.53272),
    (0.91, 1.53895),
    (0.92, 1.54542),
    (0.93, 1.55214),
    (0.94, 1.55914),
    (0.95, 1.56644),
    (0.96, 1.57408),
    (0.97, 1.58208),
    (0.98, 1.59049),
    (0.99, 1.59937),
    (1.0, 1.60881),
];

pub const FIG3_N100_LOWER: &[(f64, f64)] = &[
    (0.001, 1.00186),
    (0.01, 1.01588),
    (0.02, 1.0298),
    (0.03, 1.04286),
    (0.04, 1.05533),
    (0.05, 1.06733),
    (0.06, 1.07894),
    (0.07, 1.09022),
    (0.08, 1.10121),
    (0.09, 1.11192),
    (0.1, 1.12238),
    (0.11, 1.13261),
    (0.12, 1.14261),
    (0.13, 1.15241),
    (0.14, 1.162),
    (0.15, 1.1714),
    (0.16, 1.1806),
    (0.17, 1.18962),
    (0.18, 1.19846),
    (0.19, 1.20711),
    (0.2, 1.21559),
    (0.21, 1.2239),
    (0.22, 1.23203),
    (0.23, 1.23998),
    (0.24, 1.24777),
    (0.25, 1.25538),
    (0.26, 1.26281),
    (0.27, 1.27008),
    (0.28, 1.27717),
    (0.29, 1.28409),
    (0.3, 1.29083),
    (0.31, 1.2974),
    (0.32, 1.30379),
    (0.33, 1.31),
    (0.34, 1.31603),
    (0.35, 1.32188),
    (0.36, 1.32754),
    (0.37, 1.33302),
    (0.38, 1.33831),
    (0.39, 1.34341),
    (0.4, 1.34831),
    (0.41, 1.35302),
    (0.42, 1.35753),
    (0.43, 1.36183),
    (0.44, 1.36594),
    (0.45, 1.36983),
    (0.46, 1.37351),
    (0.47, 1.37698),
    (0.48, 1.38023),
    (0.49, 1.38326),
    (0.5, 1.38608),
    (0.51, 1.38888),
    (0.52, 1.39172),
    (0.53, 1.39458),
    (0.54, 1.39748),
    (0.55, 1.40041),
    (0.56, 1.40337),
    (0.57, 1.40637),
    (0.58, 1.4094),
    (0.59, 1.41246),
    (0.6, 1.41556),
    (0.61, 1.41869),
    (0.62, 1.42186),
    (0.63, 1.42507),
    (0.64, 1.42831),
    (0.65, 1.4316),
    (0.66, 1.43492),
    (0.67, 1.43828),
    (0.68, 1.44168),
    (0.69, 1.44512),
    (0.7, 1.44861),
    (0.71, 1.45213),
    (0.72, 1.45571),
    (0.73, 1.45932),
    (0.74, 1.46298),
    (0.75, 1.46668),
    (0.76, 1.47044),
    (0.77, 1.47424),
    (0.78, 1.47808),
    (0.79, 1.48198),
    (0.8, 1.48593),
    (0.81, 1.48993),
    (0.82, 1.49398),
    (0.83, 1.49809),
    (0.84, 1.50225),
    (0.85, 1.50647),
    (0.86, 1.51075),
    (0.87, 1.51508),
    (0.88, 1.51947),
    (0.89, 1.52393),
    (0.9, 1.52844),
    (0.91, 1.53302),
    (0.92, 1.53767),
    (0.93, 1.54238),
    (0.94, 1.54716),
    (0.95, 1.55201),
    (0.96, 1.55693),
    (0.97, 1.56193),
    (0.98, 1.567),
    (0.99, 1.57214),
    (1.0, 1.57737),
];

pub const FIG3_N100_UPPER: &[(f64, f64)] = &[
    (0.001, 1.2303),
    (0.01, 1.23332),
    (0.02, 1.2367),
    (0.03, 1.24009),
    (0.04, 1.2435),
    (0.05, 1.24692),
    (0.06, 1.25036),
    (0.07, 1.25381),
    (0.08, 1.25726),
    (0.09, 1.26072),
    (0.1, 1.26419),
    (0.11, 1.26767),
    (0.12, 1.27115),
    (0.13, 1.27462),
    (0.14, 1.2781),
    (0.15, 1.28157),
    (0.16, 1.28504),
    (0.17, 1.2885),
    (0.18, 1.29195),
    (0.19, 1.29539),
    (0.2, 1.29882),
    (0.21, 1.30222),
    (0.22, 1.30561),
    (0.23, 1.30897),
    (0.24, 1.31231),
    (0.25, 1.31562),
    (0.26, 1.3189),
    (0.27, 1.32214),
    (0.28, 1.32535),
    (0.29, 1.32851),
    (0.3, 1.33164),
    (0.31, 1.33471),
    (0.32, 1.33773),
    (0.33, 1.3407),
    (0.34, 1.3436),
    (0.35, 1.34645),
    (0.36, 1.34923),
    (0.37, 1.35193),
    (0.38, 1.35456),
    (0.39, 1.35711),
    (0.4, 1.35961),
    (0.41, 1.36214),
    (0.42, 1.36469),
    (0.43, 1.36726),
    (0.44, 1.36987),
    (0.45, 1.3725),
    (0.46, 1.37516),
    (0.47, 1.37784),
    (0.48, 1.38056),
    (0.49, 1.3833),
    (0.5, 1.38608),
    (0.51, 1.38888),
    (0.52, 1.39172),
    (0.53, 1.39458),
    (0.54, 1.39748),
    (0.55, 1.40041),
    (0.56, 1.40337),
    (0.57, 1.40637),
    (0.58, 1.4094),
    (0.59, 1.41246),
    (0.6, 1.41556),
    (0.61, 1.41869),
    (0.62, 1.42186),
    (0.63, 1.42507),
    (0.64, 1.42831),
    (0.65, 1.4316),
    (0.66, 1.43492),
    (0.67, 1.43828),
    (0.68, 1.44168),
    (0.69, 1.44512),
    (0.7, 1.44861),
    (0.71, 1.45213),
    (0.72, 1.45571),
    (0.73, 1.45932),
    (0.74, 1.46298),
    (0.75, 1.46668),
    (0.76, 1.47044),
    (0.77, 1.47424),
    (0.78, 1.47808),
    (0.79, 1.48198),
    (0.8, 1.48593),
    (0.81, 1.48993),
    (0.82, 1.49398),
    (0.83, 1.49809),
    (0.84, 1.50225),
    (0.85, 1.50647),
    (0.86, 1.51075),
    (0.87, 1.51508),
    (0.88, 1.51948),
    (0.89, 1.52394),
    (0.9, 1.52847),
    (0.91, 1.53307),
    (0.92, 1.53776),
    (0.93, 1.54255),
    (0.94, 1.54747),
    (0.95, 1.55259),
    (0.96, 1.55799),
    (0.97, 1.56386),
    (0.98, 1.57045),
    (0.99, 1.57813),
    (1.0, 1.58737),
];

pub const FIG4_ASYMPTOTIC: &[(f64, f64)] = &[
    (0.0, 1.0),
    (0.01, 1.01616),
    (0.02, 1.03028),
    (0.03, 1.04351),
    (0.04, 1.05614),
    (0.05, 1.06828),
    (0.06, 1.08003),
    (0.07, 1.09143),
    (0.08, 1.10253),
    (0.09, 1.11334),
    (0.1, 1.12391),
    (0.11, 1.13423),
    (0.12, 1.14432),
    (0.13, 1.1542),
    (0.14, 1.16388),
    (0.15, 1.17335),
    (0.16, 1.18262),
    (0.17, 1.19171),
    (0.18, 1.20061),
    (0.19, 1.20933),
    (0.2, 1.21786),
    (0.21, 1.22622),
    (0.22, 1.2344),
    (0.23, 1.2424),
    (0.24, 1.25023),
    (0.25, 1.25788),
    (0.26, 1.26535),
    (0.27, 1.27265),
    (0.28, 1.27977),
    (0.29, 1.28672),
    (0.3, 1.29349),
    (0.31, 1.30008),
    (0.32, 1.30649),
    (0.33, 1.31272),
    (0.34, 1.31876),
    (0.35, 1.32462),
    (0.36, 1.33029),
    (0.37, 1.33578),
    (0.38, 1.34107),
    (0.39, 1.34617),
    (0.4, 1.35107),
    (0.41, 1.35578),
    (0.42, 1.36028),
    (0.43, 1.36458),
    (0.44, 1.36867),
    (0.45, 1.37256),
    (0.46, 1.37623),
    (0.47, 1.37968),
    (0.48, 1.38291),
    (0.49, 1.38592),
    (0.5, 1.38874),
    (0.51, 1.39158),
    (0.52, 1.39444),
    (0.53, 1.39734),
    (0.54, 1.40027),
    (0.55, 1.40323),
    (0.56, 1.40622),
    (0.57, 1.40925),
    (0.58, 1.41231),
    (0.59, 1.41541),
    (0.6, 1.41854),
    (0.61, 1.4217),
    (0.62, 1.42491),
    (0.63, 1.42815),
    (0.64, 1.43143),
    (0.65, 1.43475),
    (0.66, 1.4381),
    (0.67, 1.4415),
    (0.68, 1.44494),
    (0.69, 1.44841),
    (0.7, 1.45193),
    (0.71, 1.4555),
    (0.72, 1.4591),
    (0.73, 1.46276),
    (0.74, 1.46645),
    (0.75, 1.4702),
    (0.76, 1.47399),
    (0.77, 1.47783),
    (0.78, 1.48171),
    (0.79, 1.48565),
    (0.8, 1.48964),
    (0.81, 1.49368),
    (0.82, 1.49777),
    (0.83, 1.50192),
    (0.84, 1.50613),
    (0.85, 1.51039),
    (0.86, 1.5147),
    (0.87, 1.51908),
    (0.88, 1.52352),
    (0.89, 1.52802),
    (0.9, 1.53258),
    (0.91, 1.5372),
    (0.92, 1.54189),
    (0.93, 1.54665),
    (0.94, 1.55148),
    (0.95, 1.55638),
    (0.96, 1.56135),
    (0.97, 1.56639),
    (0.98, 1.57151),
    (0.99, 1.5767),
    (1.0, 1.58198),
];
