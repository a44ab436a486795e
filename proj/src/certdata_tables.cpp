#include "tconfig/certdata.hpp"

namespace tconfig::certdata::tables {

// Sz04 T5: printed X-block factors; completion (a'' blocks, c, d) derived,
// kappa = 2 (see the verification report for the derived/printed split)
extern const long t5_aprime[5][2] = {{1,-1},{1,-2},{1,-3},{-3,7},{0,-1}};
extern const long t5_b[5][2]      = {{1,1},{1,2},{1,0},{1,1},{1,2}};
extern const long t5_app[5][2] = {{144,270},{0,43},{-287,-276},{430,282},{-287,-319}};
extern const long t5_d[5] = {-445,71,-453,115,-437};
extern const long t5_c[5] = {-1686,-962,-3999,0,-1468};

// T14 in two dimensions, bit-exact as printed
extern const long t14_2d_a[14][2] = {{1,1},
     {1,2},
     {0,1},
     {5,2},
     {11,9},
     {17,7},
     {47,19},
     {23,9},
     {41,18},
     {68,1},
     {299,171},
     {101,21},
     {-3084,-1857},
     {2401,1590}};
extern const long t14_2d_n[14][2] = {{1,0},
     {0,1},
     {2,1},
     {3,2},
     {1,2},
     {1,1},
     {1,5},
     {1,0},
     {0,1},
     {1,2},
     {1,13},
     {2,1},
     {1,3},
     {1,2}};
extern const long t14_2d_b[14][2] = {{0,-2390},
     {-478,2665},
     {-550,769},
     {167,-492},
     {-1240,2977},
     {0,-293},
     {-2442,5945},
     {-1086,2706},
     {-2018,4704},
     {2898,6192},
     {-38226,67612},
     {-197436,313998},
     {-165154,173736},
     {600721,-884543}};
extern const long t14_2d_A[14][4] = {{1,0,1,0},
     {0,1,0,2},
     {0,0,2,1},
     {15,10,6,4},
     {11,22,9,18},
     {17,17,7,7},
     {47,235,19,95},
     {23,0,9,0},
     {0,41,0,18},
     {68,136,1,2},
     {299,3887,171,2223},
     {202,101,42,21},
     {-3084,-9252,-1857,-5571},
     {2401,4802,1590,3180}};
extern const long t14_2d_B[14][4] = {{0,0,-2390,0},
     {0,-478,0,2665},
     {-1100,-550,1538,769},
     {501,334,-1476,-984},
     {-1240,-2480,2977,5954},
     {0,0,-293,-293},
     {-2442,-12210,5945,29725},
     {-1086,0,2706,0},
     {0,-2018,0,4704},
     {2898,5796,6192,12384},
     {-38226,-496938,67612,878956},
     {-394872,-197436,627996,313998},
     {-165154,-495462,173736,521208},
     {600721,1201442,-884543,-1769086}};
extern const long t14_2d_X[14][4] = {{2,0,2,0},
     {1,2,1,4},
     {1,1,5,4},
     {31,21,15,11},
     {38,55,27,43},
     {61,67,32,39},
     {138,520,63,222},
     {137,285,62,127},
     {114,367,53,163},
     {250,598,55,149},
     {780,8236,396,4593},
     {885,4551,309,2412},
     {-5485,-14054,-3447,-8751},
     {2401,4802,1590,3180}};
extern const long t14_2d_Y[14][4] = {{0,0,-4780,0},
     {0,-956,-2390,5330},
     {-2200,-1578,686,4203},
     {-98,-360,-3804,1466},
     {-3079,-5654,3626,14358},
     {-1839,-3174,63,7818},
     {-6723,-27594,12246,67561},
     {-6453,-15384,11713,37836},
     {-5367,-19420,9007,47244},
     {429,-5810,21391,67308},
     {-78921,-1005482,150423,1812836},
     {-830439,-903416,1338803,1561876},
     {-765875,-1696904,1058279,2290294},
     {600721,1201442,-884543,-1769086}};
extern const long t14_2d_det[14][14] = {{0,-2,-7,46,173,291,-1528,45,-461,5258,328370,732639,-455509,3244},
     {-2,0,4,-56,65,85,-2250,-535,-1013,3921,322401,727580,-435158,-4800},
     {-7,4,0,10,255,318,-236,540,399,6255,354946,745472,-487930,12815},
     {46,-56,10,0,-184,58,-1375,-112,-532,7142,302003,718634,-396458,-19545},
     {173,65,255,-184,0,-152,1160,266,1008,7268,357311,738671,-445404,-6830},
     {291,85,318,58,-152,0,48,148,272,8577,300810,713284,-377619,-27190},
     {-1528,-2250,-236,-1375,1160,48,0,-140,-114,-7552,236754,644304,-699561,155340},
     {45,-535,540,-112,266,148,-140,0,-90,4677,216004,655478,-403435,10016},
     {-461,-1013,399,-532,1008,272,-114,-90,0,-2366,251313,662875,-564014,83284},
     {5258,3921,6255,7142,7268,8577,-7552,4677,-2366,0,-249238,432943,-269804,66541},
     {328370,322401,354946,302003,357311,300810,236754,216004,251313,-249238,0,-549600,-2060310,1809723},
     {732639,727580,745472,718634,738671,713284,644304,655478,662875,432943,-549600,0,1227930,842757},
     {-455509,-435158,-487930,-396458,-445404,-377619,-699561,-403435,-564014,-269804,-2060310,1227930,0,-889806},
     {3244,-4800,12815,-19545,-6830,-27190,155340,10016,83284,66541,1809723,842757,-889806,0}};
extern const long t14_2d_ineq[14][14] = {{0,-14094,-8,-84,-20318,-22264,-1591,-55202,-75998,-1111337,-65587591,-167102263,-61464611,-4646178},
     {-8,0,-6942,-20256,-202,-8618,-21109,-8664,-886,-67141,-250717,-36763141,-144984275,-3687990},
     {-3838,-10,0,-62,-291,-41937,-1703,-132411,-130913,-2399922,-111671426,-272490671,-369903,-3001900},
     {-68,-13720,-2848,0,-9546,-266,-3327,-3264,-31950,-483619,-35079069,-102909587,-102243013,-4157616},
     {-34208,-5848,-57545,-6086,0,-106,-3106,-1060,-38580,-1280328,-60252787,-171624418,-67043568,-1415309},
     {-491,-309,-9119,-242,-126,0,-2729,-7504,-26058,-645499,-35937776,-110475298,-99454131,-3531578},
     {-60472,-81109,-48804,-69076,-30146,-34503,0,-1597,-5980,-4718,-161415,-30415525,-152191972,-1832422},
     {-4374,-2198,-23573,-18270,-32330,-19876,-1953,0,-946,-3408,-9449058,-55634422,-130221766,-5207692},
     {-11446,-30670,-2733,-31488,-2816,-11722,-2579,-4314,0,-1106,-286694,-30537574,-149251076,-3155154},
     {-103250,-216455,-7784,-136018,-40558,-79267,-3849,-80239,-75380,0,-149790,-316577,-171133360,-74451},
     {-585154,-767541,-82753,-1295659,-413553,-1533006,-3154731,-3530376,-2758743,-11458950,0,-561952,-171398130,-147875},
     {-13265973,-6363564,-20766439,-2984648,-10736775,-334280,-74865005,-12298686,-42511131,-18539785,-379448,0,-742748,-101297011},
     {-52307366,-45222386,-63419413,-26275272,-43020936,-16275094,-168954753,-34276306,-107134832,-18797070,-1409240700,-206702,0,-908356},
     {-10654898,-10843506,-10290272,-11879017,-11087582,-12283048,-394405,-9564210,-4999540,-8915559,-1492927,-334307895,-44196336,0}};
extern const long t14_2d_c[14] = {0,-4938,-18804,-54520,-192834,-176960,-992337,-553838,-682858,167765,29184771,123336787,123336787,-10696958};
extern const long t14_2d_d[14] = {-44,128,-189,42,-59,29,140,102,140,199,241,-503,186,-337};

// T14 in three dimensions, bit-exact as printed
extern const long t14_3d_A[14][9] = {{1,0,0,1,0,0,0,0,0},
     {0,1,0,0,2,0,0,0,0},
     {0,0,0,2,1,0,0,0,0},
     {15,10,0,6,4,0,0,0,0},
     {11,22,0,9,18,0,0,0,0},
     {17,17,0,7,7,0,0,0,0},
     {47,235,0,19,95,0,0,0,0},
     {23,0,0,9,0,0,0,0,0},
     {0,41,0,0,18,0,0,0,0},
     {-106,-212,0,-54,-108,0,0,0,0},
     {-9,-117,0,-4,-52,0,0,0,0},
     {-1,-1,-1,-1,-1,-1,-1,-1,-1},
     {1,3,0,5,15,0,0,0,0},
     {1,1,1,1,1,1,1,1,1}};
extern const long t14_3d_B[14][9] = {{0,0,1,0,43595,0,0,0,0},
     {61797,0,0,-962,0,-1,0,0,0},
     {24101,-48202,0,155,-310,0,0,0,0},
     {112530,-168795,0,-285490,428235,0,0,0,0},
     {534254,-267127,0,-705914,352957,0,0,0,0},
     {198074,-198074,0,-484546,484546,0,0,0,0},
     {2371885,-474377,0,-5869210,1173842,0,0,0,0},
     {0,-217131,0,0,558346,0,0,0,1},
     {475997,0,0,-1086645,0,0,0,0,0},
     {-2938894,1469447,0,5747526,-2873763,0,0,0,0},
     {-1483326,114102,0,3324373,-255721,0,0,0,1},
     {3,-3,0,383268,-383269,1,0,0,0},
     {1201149,-400383,-367028,-1859523,619841,688669,-6,2,2},
     {-557570,190543,367027,836968,-148299,-688669,6,-2,-4}};
extern const long t14_3d_Q[14][9] = {{171,1,0,-75,0,-43595,-155,0,0},
     {0,8,61797,1,58,-962,0,-101,0},
     {0,0,24101,0,0,155,0,0,0},
     {0,0,56265,0,0,-142745,0,0,0},
     {0,0,267127,0,0,-352957,0,0,0},
     {0,0,198074,0,0,-484546,0,0,0},
     {0,0,474377,0,0,-1173842,0,0,0},
     {65,0,217131,91,0,-558346,-204,1,0},
     {0,-137,475997,0,-212,-1086645,0,1,0},
     {0,0,-1469447,0,0,2873763,0,0,0},
     {0,0,-114102,0,0,255721,0,1,0},
     {0,0,3,0,1,383269,0,0,0},
     {0,-367028,400383,0,688669,-619841,0,2,-2},
     {0,367027,-190543,0,-688669,148299,0,-4,2}};
extern const long t14_3d_n[14][3] = {{1,0,0},
     {0,1,0},
     {2,1,0},
     {3,2,0},
     {1,2,0},
     {1,1,0},
     {1,5,0},
     {1,0,0},
     {0,1,0},
     {1,2,0},
     {1,13,0},
     {1,1,1},
     {1,3,0},
     {1,1,1}};
extern const long t14_3d_a[14][3] = {{1,1,0},
     {1,2,0},
     {0,1,0},
     {5,2,0},
     {11,9,0},
     {17,7,0},
     {47,19,0},
     {23,9,0},
     {41,18,0},
     {-106,-54,0},
     {-9,-4,0},
     {-1,-1,-1},
     {1,5,0},
     {1,1,1}};
extern const long t14_3d_c[14] = {0,-193352,-170909,-2127668,-8107342,-10761971,32323016,-7686922,5363342,-32272240,18951257,2303591,2997661,277746};
extern const long t14_3d_m[14] = {-165,85074,-3130948,-6333,689,134,51,907,97,40,-17,-16,43,-221};
extern const long t14_3d_d[14][9] = {{0,0,0,0,2,-182467,0,1033781,-25405},
     {0,0,0,0,3,0,0,894424,-26015},
     {0,0,0,0,1,0,0,863315,-29063},
     {0,0,0,0,1,0,121,-289167,-27231},
     {0,0,0,0,1,0,21110,1278617,-28088},
     {0,0,0,0,1,1,19661,320873,-27865},
     {0,0,0,0,0,0,2579165,-7138143,-24395},
     {0,0,0,0,1,0,47457,785115,-25976},
     {0,0,0,0,0,0,257708,327493,-25470},
     {0,0,0,0,1,3,1191038,-3050248,-27779},
     {0,0,0,0,0,87,3073,555789,-27773},
     {0,0,0,0,266745,611036,766267,-1237038,-24914},
     {0,0,0,0,-1556334,-573705,-1094427,2661105,-49244},
     {0,0,0,0,-103426,-37004,-235151,639412,-27210}};

// derived exact certificate for the 3-D configuration (dyadic rationals;
// LP-derived, margin 50, verified exactly)
extern const char* t14_3d_cert_c[14] = {"-271176767187781/8388608","-272787273461715/8388608","-272609305771997/8388608","-72255820205253/2097152","-42397099998459/1048576","-361449971915319/8388608","0","-167820830634035/4194304","-113080678933775/4194304","-66144305911/1024","-56086647225541/4194304","-16077520651137/524288","-138449361937099/4194304","-269129849997931/8388608"};
extern const char* t14_3d_cert_m[14] = {"-400000","5916848818877/16777216","-400000","-400000","-2556925390939/16777216","611799824523/2097152","-4871072999757/16777216","-400000","-4993995479763/16777216","-1639626231239/16777216","-5972143751579/16777216","-248382480567/2097152","-283136689333/8388608","-400000"};
extern const char* t14_3d_cert_d[14][9] = {{"-400000","1966970535877/8388608","-400000","-400000","400000","-400000","1159081190365/16777216","-400000","-426194563293/16777216"},
     {"-400000","-400000","-691787297781/2097152","-400000","-400000","-400000","-400000","-400000","-218250839749/8388608"},
     {"-400000","-2788430946189/8388608","-3796117354675/16777216","-400000","400000","-400000","-400000","-400000","-487661942079/16777216"},
     {"2342769944005/16777216","400000","-400000","215040843663/2097152","-400000","400000","400000","400000","-456967470601/16777216"},
     {"400000","-400000","-400000","-400000","400000","-400000","6369530582477/16777216","400000","-235582149941/8388608"},
     {"-400000","-258729646757/1048576","-400000","-400000","-400000","-400000","-400000","400000","-233781895683/8388608"},
     {"-400000","-400000","-400000","-400000","-400000","400000","-400000","-400000","-409268730787/16777216"},
     {"-6625141721449/16777216","-400000","-400000","-400000","400000","-400000","-1576420798595/8388608","-400000","-108964349287/4194304"},
     {"-400000","-400000","-3902348557589/16777216","-400000","-400000","-400000","-400000","-400000","-427325561695/16777216"},
     {"-400000","-400000","-1010591649509/4194304","-400000","-400000","-400000","-400000","-400000","-1820609653/65536"},
     {"289594245089/2097152","-400000","-400000","400000","400000","-400000","400000","400000","-465920631375/16777216"},
     {"-400000","-400000","-400000","-2001529746007/8388608","-400000","-400000","2770135050929/8388608","-400000","-126761407401/4194304"},
     {"-364253409703/8388608","-400000","-400000","-1669380143815/4194304","-400000","-400000","-400000","400000","-281563799/4096"},
     {"-400000","1148807452071/8388608","-400000","-2175200025853/8388608","400000","-4936826942509/16777216","-1913770652503/8388608","400000","-458698666033/16777216"}};

}  // namespace tconfig::certdata::tables
