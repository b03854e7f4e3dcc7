// Reference values from a 50-digit arbitrary-precision evaluation, rounded to f64.
pub const ERF_TABLE: &[(f64, f64, f64)] = &[
    (-6.0, -1.0, 2.0),
    (-5.999, -1.0, 2.0),
    (-5.95, -1.0, 2.0),
    (-5.9, -0.9999999999999999, 2.0),
    (-5.85, -0.9999999999999999, 1.9999999999999998),
    (-5.8, -0.9999999999999998, 1.9999999999999998),
    (-5.75, -0.9999999999999996, 1.9999999999999996),
    (-5.7, -0.9999999999999992, 1.9999999999999993),
    (-5.65, -0.9999999999999987, 1.9999999999999987),
    (-5.6, -0.9999999999999977, 1.9999999999999976),
    (-5.55, -0.9999999999999958, 1.9999999999999958),
    (-5.5, -0.9999999999999927, 1.9999999999999927),
    (-5.45, -0.9999999999999871, 1.9999999999999871),
    (-5.4, -0.9999999999999777, 1.9999999999999778),
    (-5.35, -0.9999999999999615, 1.9999999999999616),
    (-5.3, -0.9999999999999338, 1.9999999999999338),
    (-5.25, -0.9999999999998869, 1.999999999999887),
    (-5.2, -0.9999999999998075, 1.9999999999998075),
    (-5.15, -0.999999999999674, 1.999999999999674),
    (-5.1, -0.9999999999994507, 1.9999999999994507),
    (-5.05, -0.9999999999990787, 1.9999999999990787),
    (-5.0, -0.9999999999984626, 1.9999999999984626),
    (-4.95, -0.9999999999974469, 1.999999999997447),
    (-4.9, -0.999999999995781, 1.9999999999957812),
    (-4.85, -0.9999999999930624, 1.9999999999930624),
    (-4.8, -0.9999999999886479, 1.9999999999886477),
    (-4.75, -0.9999999999815149, 1.999999999981515),
    (-4.7, -0.9999999999700474, 1.9999999999700473),
    (-4.65, -0.999999999951703, 1.999999999951703),
    (-4.6, -0.999999999922504, 1.999999999922504),
    (-4.55, -0.9999999998762595, 1.9999999998762594),
    (-4.5, -0.9999999998033839, 1.999999999803384),
    (-4.45, -0.9999999996891137, 1.9999999996891136),
    (-4.4, -0.999999999510829, 1.999999999510829),
    (-4.35, -0.9999999992340556, 1.9999999992340556),
    (-4.3, -0.9999999988065282, 1.9999999988065282),
    (-4.25, -0.9999999981494259, 1.9999999981494259),
    (-4.2, -0.9999999971445058, 1.9999999971445057),
    (-4.15, -0.9999999956153229, 1.999999995615323),
    (-4.1, -0.9999999932999724, 1.9999999932999724),
    (-4.05, -0.9999999898117551, 1.999999989811755),
    (-4.0, -0.9999999845827421, 1.999999984582742),
    (-3.95, -0.9999999767832678, 1.9999999767832677),
    (-3.9, -0.9999999652077514, 1.9999999652077514),
    (-3.85, -0.9999999481137066, 1.9999999481137065),
    (-3.8, -0.9999999229960725, 1.9999999229960725),
    (-3.75, -0.9999998862727434, 1.9999998862727435),
    (-3.7, -0.9999998328489421, 1.9999998328489421),
    (-3.65, -0.9999997555173494, 1.9999997555173494),
    (-3.6, -0.999999644137007, 1.999999644137007),
    (-3.55, -0.9999994845161754, 1.9999994845161753),
    (-3.5, -0.9999992569016276, 1.9999992569016276),
    (-3.45, -0.9999989339482065, 1.9999989339482065),
    (-3.4, -0.9999984780066371, 1.999998478006637),
    (-3.35, -0.9999978375231799, 1.99999783752318),
    (-3.3, -0.9999969422902035, 1.9999969422902035),
    (-3.25, -0.9999956972205363, 1.9999956972205364),
    (-3.2, -0.9999939742388483, 1.9999939742388482),
    (-3.15, -0.9999916017886847, 1.9999916017886847),
    (-3.1, -0.9999883513426328, 1.9999883513426329),
    (-3.05, -0.9999839201742399, 1.9999839201742398),
    (-3.0, -0.9999779095030014, 1.9999779095030015),
    (-2.95, -0.9999697969579359, 1.9999697969579358),
    (-2.9, -0.9999589021219005, 1.9999589021219006),
    (-2.857142857142857, -0.9999466876886117, 1.9999466876886116),
    (-2.85, -0.9999443437200386, 1.9999443437200386),
    (-2.8, -0.9999249868053346, 1.9999249868053346),
    (-2.75, -0.9998993780778803, 1.9998993780778804),
    (-2.7, -0.9998656672600594, 1.9998656672600594),
    (-2.65, -0.999821512247976, 1.999821512247976),
    (-2.6, -0.9997639655834707, 1.9997639655834707),
    (-2.55, -0.9996893396573608, 1.9996893396573607),
    (-2.5, -0.999593047982555, 1.999593047982555),
    (-2.45, -0.999469419887749, 1.999469419887749),
    (-2.4, -0.999311486103355, 1.999311486103355),
    (-2.35, -0.9991107329678676, 1.9991107329678675),
    (-2.3, -0.9988568234026434, 1.9988568234026434),
    (-2.25, -0.9985372834133188, 1.9985372834133188),
    (-2.2, -0.9981371537020182, 1.998137153702018),
    (-2.15, -0.9976386070373253, 1.9976386070373253),
    (-2.1, -0.997020533343667, 1.997020533343667),
    (-2.05, -0.9962580960444569, 1.996258096044457),
    (-2.0, -0.9953222650189527, 1.9953222650189528),
    (-1.95, -0.9941793335921891, 1.9941793335921891),
    (-1.9, -0.9927904292352575, 1.9927904292352574),
    (-1.85, -0.9911110300560857, 1.9911110300560857),
    (-1.8, -0.9890905016357308, 1.9890905016357308),
    (-1.75, -0.9866716712191824, 1.9866716712191825),
    (-1.7, -0.9837904585907745, 1.9837904585907746),
    (-1.65, -0.9803755850233603, 1.9803755850233602),
    (-1.6, -0.976348383344644, 1.976348383344644),
    (-1.55, -0.9716227332620125, 1.9716227332620127),
    (-1.5, -0.9661051464753108, 1.9661051464753108),
    (-1.45, -0.9596950256374592, 1.9596950256374592),
    (-1.4, -0.9522851197626488, 1.9522851197626487),
    (-1.35, -0.943762196122724, 1.943762196122724),
    (-1.3, -0.9340079449406524, 1.9340079449406524),
    (-1.25, -0.9229001282564583, 1.9229001282564582),
    (-1.2499999, -0.922900104604343, 1.922900104604343),
    (-1.2, -0.9103139782296353, 1.9103139782296354),
    (-1.15, -0.8961238429369149, 1.896123842936915),
    (-1.1, -0.8802050695740817, 1.8802050695740817),
    (-1.05, -0.8624361060900967, 1.8624361060900967),
    (-1.0, -0.8427007929497149, 1.8427007929497148),
    (-0.95, -0.8208908072732779, 1.820890807273278),
    (-0.9, -0.7969082124228322, 1.7969082124228322),
    (-0.85, -0.7706680576083526, 1.7706680576083524),
    (-0.84375, -0.7672256612323416, 1.7672256612323416),
    (-0.84374999, -0.7672256556953392, 1.7672256556953392),
    (-0.8, -0.7421009647076605, 1.7421009647076604),
    (-0.75, -0.7111556336535151, 1.7111556336535152),
    (-0.7, -0.6778011938374184, 1.6778011938374184),
    (-0.65, -0.6420293273556719, 1.6420293273556719),
    (-0.6, -0.6038560908479259, 1.6038560908479258),
    (-0.55, -0.563323366325109, 1.563323366325109),
    (-0.5, -0.5204998778130465, 1.5204998778130465),
    (-0.45, -0.47548171978692366, 1.4754817197869237),
    (-0.4, -0.42839235504666845, 1.4283923550466684),
    (-0.35, -0.3793820535623103, 1.3793820535623103),
    (-0.3, -0.3286267594591274, 1.3286267594591274),
    (-0.25, -0.27632639016823696, 1.276326390168237),
    (-0.2, -0.22270258921047847, 1.2227025892104784),
    (-0.15, -0.1679959714273635, 1.1679959714273636),
    (-0.1, -0.1124629160182849, 1.1124629160182848),
    (-0.05, -0.05637197779701663, 1.0563719777970166),
    (
        -3.725290298461914e-09,
        -4.203539964167448e-09,
        1.00000000420354,
    ),
    (-1e-10, -1.1283791670955126e-10, 1.000000000112838),
    (0.0, 0.0, 1.0),
    (1e-10, 1.1283791670955126e-10, 0.999999999887162),
    (
        3.725290298461914e-09,
        4.203539964167448e-09,
        0.99999999579646,
    ),
    (0.05, 0.05637197779701663, 0.9436280222029834),
    (0.1, 0.1124629160182849, 0.887537083981715),
    (0.15, 0.1679959714273635, 0.8320040285726366),
    (0.2, 0.22270258921047847, 0.7772974107895215),
    (0.25, 0.27632639016823696, 0.7236736098317631),
    (0.3, 0.3286267594591274, 0.6713732405408726),
    (0.35, 0.3793820535623103, 0.6206179464376897),
    (0.4, 0.42839235504666845, 0.5716076449533315),
    (0.45, 0.47548171978692366, 0.5245182802130763),
    (0.5, 0.5204998778130465, 0.4795001221869535),
    (0.55, 0.563323366325109, 0.436676633674891),
    (0.6, 0.6038560908479259, 0.3961439091520741),
    (0.65, 0.6420293273556719, 0.35797067264432814),
    (0.7, 0.6778011938374184, 0.32219880616258156),
    (0.75, 0.7111556336535151, 0.28884436634648486),
    (0.8, 0.7421009647076605, 0.2578990352923395),
    (0.84374999, 0.7672256556953392, 0.23277434430466082),
    (0.84375, 0.7672256612323416, 0.23277433876765838),
    (0.85, 0.7706680576083526, 0.22933194239164748),
    (0.9, 0.7969082124228322, 0.20309178757716786),
    (0.95, 0.8208908072732779, 0.17910919272672207),
    (1.0, 0.8427007929497149, 0.15729920705028513),
    (1.05, 0.8624361060900967, 0.13756389390990328),
    (1.1, 0.8802050695740817, 0.11979493042591827),
    (1.15, 0.8961238429369149, 0.10387615706308502),
    (1.2, 0.9103139782296353, 0.08968602177036464),
    (1.2499999, 0.922900104604343, 0.07709989539565698),
    (1.25, 0.9229001282564583, 0.07709987174354177),
    (1.3, 0.9340079449406524, 0.06599205505934755),
    (1.35, 0.943762196122724, 0.05623780387727592),
    (1.4, 0.9522851197626488, 0.0477148802373512),
    (1.45, 0.9596950256374592, 0.040304974362540776),
    (1.5, 0.9661051464753108, 0.033894853524689274),
    (1.55, 0.9716227332620125, 0.028377266737987458),
    (1.6, 0.976348383344644, 0.023651616655355985),
    (1.65, 0.9803755850233603, 0.019624414976639713),
    (1.7, 0.9837904585907745, 0.01620954140922544),
    (1.75, 0.9866716712191824, 0.013328328780817557),
    (1.8, 0.9890905016357308, 0.010909498364269283),
    (1.85, 0.9911110300560857, 0.00888896994391429),
    (1.9, 0.9927904292352575, 0.0072095707647425325),
    (1.95, 0.9941793335921891, 0.005820666407810883),
    (2.0, 0.9953222650189527, 0.004677734981047266),
    (2.05, 0.9962580960444569, 0.00374190395554313),
    (2.1, 0.997020533343667, 0.002979466656332984),
    (2.15, 0.9976386070373253, 0.002361392962674656),
    (2.2, 0.9981371537020182, 0.0018628462979818898),
    (2.25, 0.9985372834133188, 0.0014627165866811518),
    (2.3, 0.9988568234026434, 0.0011431765973566525),
    (2.35, 0.9991107329678676, 0.0008892670321324545),
    (2.4, 0.999311486103355, 0.0006885138966450789),
    (2.45, 0.999469419887749, 0.0005305801122510539),
    (2.5, 0.999593047982555, 0.0004069520174449589),
    (2.55, 0.9996893396573608, 0.0003106603426391908),
    (2.6, 0.9997639655834707, 0.00023603441652934908),
    (2.65, 0.999821512247976, 0.000178487752024001),
    (2.7, 0.9998656672600594, 0.0001343327399405242),
    (2.75, 0.9998993780778803, 0.00010062192211963683),
    (2.8, 0.9999249868053346, 7.501319466545911e-05),
    (2.85, 0.9999443437200386, 5.5656279961398957e-05),
    (
        2.857142857142857,
        0.9999466876886117,
        5.3312311388322795e-05,
    ),
    (2.9, 0.9999589021219005, 4.109787809945886e-05),
    (2.95, 0.9999697969579359, 3.020304206413823e-05),
    (3.0, 0.9999779095030014, 2.209049699858544e-05),
    (3.05, 0.9999839201742399, 1.6079825760166998e-05),
    (3.1, 0.9999883513426328, 1.1648657367199589e-05),
    (3.15, 0.9999916017886847, 8.398211315215934e-06),
    (3.2, 0.9999939742388483, 6.025761151762088e-06),
    (3.25, 0.9999956972205363, 4.302779463675122e-06),
    (3.3, 0.9999969422902035, 3.0577097964381654e-06),
    (3.35, 0.9999978375231799, 2.162476820040182e-06),
    (3.4, 0.9999984780066371, 1.5219933628622864e-06),
    (3.45, 0.9999989339482065, 1.0660517934737798e-06),
    (3.5, 0.9999992569016276, 7.430983723414128e-07),
    (3.55, 0.9999994845161754, 5.154838246337957e-07),
    (3.6, 0.999999644137007, 3.5586299300768504e-07),
    (3.65, 0.9999997555173494, 2.4448265057537747e-07),
    (3.7, 0.9999998328489421, 1.6715105790914599e-07),
    (3.75, 0.9999998862727434, 1.1372725656979665e-07),
    (3.8, 0.9999999229960725, 7.700392745696424e-08),
    (3.85, 0.9999999481137066, 5.1886293410472546e-08),
    (3.9, 0.9999999652077514, 3.4792248597231765e-08),
    (3.95, 0.9999999767832678, 2.3216732236649275e-08),
    (4.0, 0.9999999845827421, 1.541725790028002e-08),
    (4.05, 0.9999999898117551, 1.0188244933541046e-08),
    (4.1, 0.9999999932999724, 6.700027654084918e-09),
    (4.15, 0.9999999956153229, 4.384677047753807e-09),
    (4.2, 0.9999999971445058, 2.8554941795921843e-09),
    (4.25, 0.9999999981494259, 1.8505741373867425e-09),
    (4.3, 0.9999999988065282, 1.1934717937220432e-09),
    (4.35, 0.9999999992340556, 7.6594439884221e-10),
    (4.4, 0.999999999510829, 4.891710270605872e-10),
    (4.45, 0.9999999996891137, 3.1088632307623584e-10),
    (4.5, 0.9999999998033839, 1.9661604415428876e-10),
    (4.55, 0.9999999998762595, 1.2374048267630345e-10),
    (4.6, 0.999999999922504, 7.749599597441858e-11),
    (4.65, 0.999999999951703, 4.8297032450911076e-11),
    (4.7, 0.9999999999700474, 2.9952597863796555e-11),
    (4.75, 0.9999999999815149, 1.8485047721485312e-11),
    (4.8, 0.9999999999886479, 1.135214358492198e-11),
    (4.85, 0.9999999999930624, 6.937541654625827e-12),
    (4.9, 0.999999999995781, 4.218936524005766e-12),
    (4.95, 0.9999999999974469, 2.553108602851276e-12),
    (5.0, 0.9999999999984626, 1.537459794428035e-12),
    (5.05, 0.9999999999990787, 9.213098541454633e-13),
    (5.1, 0.9999999999994507, 5.49382021755532e-13),
    (5.15, 0.999999999999674, 3.259937500940801e-13),
    (5.2, 0.9999999999998075, 1.9249061099972322e-13),
    (5.25, 0.9999999999998869, 1.1310313266887154e-13),
    (5.3, 0.9999999999999338, 6.613081850340811e-14),
    (5.35, 0.9999999999999615, 3.8476604049593347e-14),
    (5.4, 0.9999999999999777, 2.227678679467786e-14),
    (5.45, 0.9999999999999871, 1.2834257871870466e-14),
    (5.5, 0.9999999999999927, 7.357847917974398e-15),
    (5.55, 0.9999999999999958, 4.197513816747158e-15),
    (5.6, 0.9999999999999977, 2.382836284583028e-15),
    (5.65, 0.9999999999999987, 1.346035432785618e-15),
    (5.7, 0.9999999999999992, 7.566211621862486e-16),
    (5.75, 0.9999999999999996, 4.232136617425738e-16),
    (5.8, 0.9999999999999998, 2.3555893751564417e-16),
    (5.85, 0.9999999999999999, 1.3046611497637015e-16),
    (5.9, 0.9999999999999999, 7.190409783550478e-17),
    (5.95, 1.0, 3.94336397733967e-17),
    (5.999, 1.0, 2.1783043429548017e-17),
    (6.0, 1.0, 2.1519736712498913e-17),
];

pub const ERFC_TAIL: &[(f64, f64)] = &[
    (1.5, 0.033894853524689274),
    (2.0, 0.004677734981047266),
    (3.0, 2.209049699858544e-05),
    (4.0, 1.541725790028002e-08),
    (5.0, 1.537459794428035e-12),
    (6.5, 3.8421483271206475e-20),
    (8.0, 1.1224297172982926e-29),
    (10.0, 2.088487583762545e-45),
    (12.5, 6.231942781979911e-70),
    (15.0, 7.212994172451207e-100),
    (20.0, 5.395865611607901e-176),
    (25.0, 8.300172571196523e-274),
    (26.5, 2.2109076642637343e-307),
];
