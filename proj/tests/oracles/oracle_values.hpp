#pragma once

// Generated by tests/oracles/generate.py. Do not edit.

#include <array>

namespace oracle {

struct NormalPoint { double x, cdf, log_cdf; };
struct QuantilePoint { double p, q; };
struct BetaPoint { double a, b, x, ibeta, median, median_score; };
struct MomentPoint { double l, u, a1, a2, a3, a4; };
struct SigmaPoint { double l, u, s11, s12, s22; };

inline constexpr std::array<NormalPoint, 22> kNormal{{
    {-38.0, 2.88542835e-316, -726.5572160188201},
    {-30.0, 4.906713927148187e-198, -454.3212439563432},
    {-20.0, 2.7536241186062337e-89, -203.91715537109727},
    {-10.0, 7.619853024160525e-24, -53.23128515051247},
    {-8.0, 6.220960574271784e-16, -35.01343715991455},
    {-5.0, 2.866515718791939e-07, -15.064998393988725},
    {-3.0, 0.0013498980316300946, -6.607726221510349},
    {-2.0, 0.02275013194817921, -3.783184333682032},
    {-1.5, 0.06680720126885807, -2.7059444008238898},
    {-1.0, 0.15865525393145705, -1.8410216450092636},
    {-0.5, 0.3085375387259869, -1.1759117615936185},
    {-0.1, 0.460172162722971, -0.7761545927302733},
    {0.0, 0.5, -0.6931471805599453},
    {0.1, 0.539827837277029, -0.6165050101150263},
    {0.5, 0.6914624612740131, -0.3689464152886564},
    {1.0, 0.8413447460685429, -0.17275377902344988},
    {1.5, 0.9331927987311419, -0.06914345561223398},
    {2.0, 0.9772498680518208, -0.02301290932896349},
    {3.0, 0.9986501019683699, -0.0013508099647481938},
    {5.0, 0.9999997133484281, -2.866516129637636e-07},
    {7.0, 0.9999999999987201, -1.279812543886654e-12},
    {8.0, 0.9999999999999993, -6.220960574271786e-16},
}};

inline constexpr std::array<QuantilePoint, 15> kQuantile{{
    {1e-300, -37.0470962993612},
    {1e-100, -21.273453560965326},
    {1e-20, -9.262340089798407},
    {1e-10, -6.361340902404057},
    {1e-05, -4.264890793922825},
    {0.001, -3.0902323061678136},
    {0.02425, -1.972961051311885},
    {0.1, -1.2815515655446004},
    {0.25, -0.6744897501960817},
    {0.5, 0.0},
    {0.75, 0.6744897501960817},
    {0.9, 1.2815515655446006},
    {0.975, 1.9599639845400538},
    {0.999, 3.090232306167813},
    {0.999999999999, 7.0344869100478356},
}};

inline constexpr std::array<BetaPoint, 200> kBeta{{
    {734.9456650518724, 105.30293226800868, 0.8673363423484205, 0.2552666612853435, 0.8749737634111958, 1.150221937015184},
    {3069.8453428499274, 1.86186291036625, 0.9999282133226965, 0.9706092314183848, 0.9994981471820789, 3.2894859609227103},
    {124.14579089166519, 72.7267712008099, 0.6424806249274525, 0.6307984439971832, 0.6310326747169479, 0.3345896538266467},
    {423.41874460636546, 13.90480637875057, 0.9663584025962074, 0.38178441514046363, 0.9689163136728121, 1.8651001136341068},
    {491.4087836461447, 3922.2870728774014, 0.1063097981159955, 0.14372662965296384, 0.11127854952137466, -1.2197567560193578},
    {737.1873457423645, 0.7749520056561092, 0.9997690184290025, 0.7451349995153208, 0.999352156224944, 3.216933216840365},
    {123.10357745047664, 0.5383861774089401, 0.9999956456031462, 0.9804980692952434, 0.9978796681761449, 2.8596817318987258},
    {13.145183195136907, 0.7279960461943807, 0.9426530680039225, 0.3297843969097027, 0.9672284118906578, 1.841535138154819},
    {4.5782334255264185, 0.616361711875637, 0.8793117956439903, 0.3577624683750332, 0.9275314241459117, 1.4576495960483096},
    {160.20255917908491, 1.194246808443485, 0.9901403124837337, 0.264675826128725, 0.9945110134257967, 2.5433991850736235},
    {2493.308127872729, 247.3641487101852, 0.9127378362453189, 0.7034513113887386, 0.9098429253262916, 1.33978839580025},
    {4.953955831693208, 0.5151000460674431, 0.7419403555926619, 0.09694232945924901, 0.9503140780874799, 1.6479065757728686},
    {21.253869709942407, 4.398632833103243, 0.864559856878904, 0.6529361963710067, 0.8371282349093252, 0.9827235230064916},
    {1921.8396347509963, 3602.1977232633444, 0.3486005323920839, 0.5443403088688842, 0.3478865377925235, -0.39103268603481006},
    {4.964820771150137, 69.57672102684775, 0.08323344869670316, 0.7478520302132347, 0.06274924860537179, -1.5320970111381036},
    {11.648069129594662, 1736.0620592164842, 0.007925641686689962, 0.7600952079246313, 0.006477503022614022, -2.485003776072073},
    {723.5493774325518, 6.0015803765213835, 0.989734044112829, 0.24250269148773068, 0.9922186187251075, 2.4190111643950494},
    {279.83027662315453, 221.39191999483577, 0.5857690880029419, 0.8926669119831715, 0.5583734582382522, 0.1468466232470934},
    {5.361240246659834, 1.571131260446051, 0.9997733630895523, 0.9999797014880656, 0.8004550190167726, 0.8432476358571391},
    {26.945147161429183, 4693.988839355277, 0.006605398336681013, 0.8002769722762855, 0.005637933814227615, -2.5340312474478663},
    {17.781117482081576, 346.1175150412051, 0.058584654058876834, 0.8114790368256949, 0.04803785737304291, -1.6641837485002615},
    {2674.03341573827, 15.657539520143283, 0.9950444567432002, 0.7044945506486348, 0.9943007232685892, 2.530236904678263},
    {1457.910164701467, 3759.4859111865217, 0.28938211794095847, 0.9446171323112103, 0.2794043405671948, -0.5846119344562128},
    {2.4818942224656264, 279.1242558944338, 0.029941220840292694, 0.9956531773906893, 0.007680168660569393, -2.423769833533857},
    {656.8406237381416, 141.6498942106618, 0.8491654322230453, 0.9787995180220805, 0.8228723315782338, 0.9263669053627445},
    {3828.9639679078123, 4.7833137579428655, 0.9977809638358601, 0.061929890612650966, 0.9988378991941648, 3.0453364331395227},
    {1.1990923293061138, 5.734402014270769, 0.0001729419928664023, 0.00023173592703076333, 0.14115214089327566, -1.075157361013394},
    {45.57101649410406, 2201.1364914287456, 0.018870789260474113, 0.33067715854918417, 0.0201412701442958, -2.050839902248382},
    {2348.028255746287, 0.5445568723240239, 0.9997559570206268, 0.31118092979893563, 0.9998866087436419, 3.6871468334651496},
    {288.4243060969677, 219.18246272160033, 0.526233921514851, 0.02866019245099944, 0.5682938619011527, 0.1720321214227106},
    {4253.233925585855, 189.41873109334063, 0.9584835340258797, 0.636793780878401, 0.9574322161172898, 1.7216355021982293},
    {1465.9301469624581, 83.45204737707117, 0.9456338300172553, 0.4517724214455963, 0.9463303992842955, 1.6102687356566874},
    {2.693129654944775, 13.720023613957615, 0.25268923926928816, 0.8409922782527108, 0.1503252473807349, -1.0350394355530395},
    {415.0413041953075, 55.37716718068827, 0.8777609208344604, 0.36800871118932205, 0.8828228847586, 1.1892171424842382},
    {276.51359970877695, 6.483165950540054, 0.9999770910245726, 1.0, 0.9782063105438317, 2.018037279664166},
    {527.1413496436295, 85.5587114647932, 0.8396154002107762, 0.07321726744159222, 0.8607501079143267, 1.0836956067360521},
    {15.51785516939678, 0.5905720713647167, 0.9588548771852368, 0.30754006520884447, 0.9801408806658862, 2.0566673105412074},
    {359.3013432969577, 442.4145630601752, 0.45546857222137477, 0.661929679483541, 0.4481222923679079, -0.1304068027501303},
    {1.2693990867430878, 145.51645355722985, 0.014441855218456133, 0.8206082662479239, 0.006541834482568103, -2.481483712276262},
    {0.8491654068842535, 12.475034402300595, 0.12124094954443301, 0.8418948402121382, 0.04323620108316756, -1.7143067606107523},
    {0.5426149616732677, 46.35285354292155, 0.026626180481832042, 0.8723373263881331, 0.0057185667640595374, -2.5290512192859103},
    {0.5200418506417444, 217.8269975555297, 0.004801383566602184, 0.8446869615657706, 0.0011243481829292614, -3.055254473411969},
    {226.53507122657552, 4.549545808980986, 0.9769411769560006, 0.30849120528689755, 0.9816817207112559, 2.089791218112943},
    {318.754395517202, 8.93362639597152, 0.9736826177176935, 0.4994767270859124, 0.9736941897398266, 1.9380951053196118},
    {258.8289649504695, 3855.7379684265393, 0.06278008084298092, 0.49423825418906814, 0.0628347038718865, -1.5314046817238858},
    {16.41835278181585, 2029.298646596056, 0.012736785519112644, 0.982839925263859, 0.007865940604769403, -2.4150770544702977},
    {1.8663529359891537, 22.231859219313105, 0.08428817261409396, 0.6319979474324522, 0.06594252563647512, -1.5067098281148914},
    {0.7204894415080196, 562.2415800753882, 0.0008584445339454971, 0.535130183034064, 0.0007585058088126162, -3.1714094356775795},
    {458.8054202608457, 459.28937168114385, 0.5221287957021599, 0.9126542575600393, 0.4997362456498036, -0.0006611341599226504},
    {4389.473374001966, 0.5164492183067726, 0.9999998823575363, 0.9773811608058736, 0.999944943544642, 3.867153969220164},
    {9.595819139095804, 1.7852559395115122, 0.9199250957102395, 0.7390087998482247, 0.8633819240166277, 1.0956404512885398},
    {344.7383668223466, 95.43143310436805, 0.7677357627186098, 0.2131649377036617, 0.7836232423942484, 0.7844885204280125},
    {98.73811246292561, 5.719259963972171, 0.9507701874622809, 0.5503674778458622, 0.9480735071378907, 1.6264545910855766},
    {78.2375650540635, 16.145830556421537, 0.75272546428521, 0.03284962579333443, 0.8312620956453705, 0.959164644038194},
    {0.8404608960542836, 205.50171861919114, 4.073141507125483e-06, 0.002747797032721392, 0.002624318754286578, -2.791364212909699},
    {0.5008199564602384, 60.01571546176149, 0.017775515048583268, 0.8565649889442213, 0.0038104350444088395, -2.6684209882533105},
    {340.3308935129819, 335.64044331911015, 0.48299473365993195, 0.1435023423559522, 0.5034728386847234, 0.008705225587491254},
    {7.95315531896759, 5.73005449021276, 0.6241403139730931, 0.6139174452209583, 0.5853030729824257, 0.21547903727159667},
    {10.820291607608311, 1470.640453539398, 0.009558086553085269, 0.8481174463945853, 0.007083252916969895, -2.4530134074896246},
    {0.7413392980964612, 13.792247806665216, 0.030889940544913563, 0.48882912675879553, 0.03211464887869965, -1.850584871814548},
    {33.34804529716222, 4.230399798385432, 0.9688981186106508, 0.9814881942483974, 0.8942951308355399, 1.24969841012988},
    {78.47540089679954, 1.450499284769261, 0.9689994746582703, 0.16465097580638816, 0.9856923176737861, 2.188745201157428},
    {760.0364247649737, 16.146249834389227, 0.9850073115817253, 0.8801322546018131, 0.9796082173478285, 2.045723672654138},
    {15.950100509317618, 18.659800814624596, 0.45818119484092784, 0.49106999888750485, 0.4600910313551728, -0.10020438764782846},
    {1.6702779572272795, 2.4385836226926574, 0.15323560755463905, 0.13519349046830859, 0.39006175791791153, -0.2791580757471702},
    {2509.8868297288363, 188.01760891219598, 0.922639072613014, 0.06223407320171193, 0.9304160804534428, 1.478897023142771},
    {220.22804862322477, 0.822005124168374, 0.9963043402006021, 0.35763309387609243, 0.997630512894942, 2.8242612356764876},
    {12.839835096169429, 1.9372261747120012, 0.7923879928375228, 0.1740608343833026, 0.8855473178726903, 1.2031833817986264},
    {62.33769517918259, 3.3895737226581524, 0.9026456321024083, 0.0645523186529243, 0.9529281794666891, 1.6739336444894892},
    {5.97666466248181, 1.2809838973023147, 0.8639471857489953, 0.5315921184892083, 0.853599058377719, 1.0519949136585534},
    {95.00542347838902, 3845.9741035088296, 0.022761818632222736, 0.29882791607568016, 0.024026593690623845, -1.9768977662162521},
    {873.0783091316997, 8.19667028681324, 0.9900648951417139, 0.37967849194238534, 0.9910677161243978, 2.3684132824049615},
    {612.6640920124987, 769.1846128381509, 0.43266810685987306, 0.21194694718884963, 0.44333820534062673, -0.14251097547141953},
    {5.039517759694244, 3.3176479338387743, 0.6647106026476218, 0.6226131940553059, 0.6115972896670486, 0.28348455361765584},
    {2082.9040599484147, 6.54369378337494, 0.9959969279334444, 0.21674620895466473, 0.9970252773867009, 2.750554729539792},
    {36.991058195538635, 90.02692874592285, 0.2395994696677325, 0.09629886270090246, 0.2901281642563996, -0.5530103419287591},
    {3756.4929430457623, 0.5549199652239273, 0.9995256950429514, 0.06873334620488217, 0.9999266886719769, 3.796720989938136},
    {2323.8608287111574, 24.305081287718433, 0.9905817209590192, 0.6529295800136563, 0.9897880399318398, 2.318467631595271},
    {8.249200610972023, 588.2934362975767, 0.01593382914870736, 0.7028272711729967, 0.013288589520716883, -2.2176723764312545},
    {713.79800260628, 233.32559256991445, 0.7441068400805644, 0.245640268516611, 0.7538268096320907, 0.686581673004192},
    {168.7796421751245, 0.5108493069771731, 0.9999969824099245, 0.9765778555757558, 0.9985958587440114, 2.9879796513426453},
    {125.54712799487527, 3763.6275101749757, 0.034237404221086974, 0.7597002586314614, 0.03220102684624517, -1.8493862899576776},
    {55.58160052043504, 112.08221405576201, 0.3360553592329053, 0.556891253048143, 0.3308348003739409, -0.43760920023075484},
    {974.9281989789265, 3135.105558483113, 0.23141725419229578, 0.19185714366452386, 0.23716422975675686, -0.7154541550025498},
    {2512.0408216945248, 3.603594339828422, 0.9990168101193948, 0.6884618398050742, 0.9986972846717763, 3.010820217816355},
    {443.3945395583324, 587.603433350846, 0.454776442307868, 0.9450713646199898, 0.43001820466017626, -0.17632781734430453},
    {12.054975122234236, 10.777100307957497, 0.542843659748223, 0.5529021854124884, 0.5288153936661528, 0.07229240015900841},
    {1586.7865033526377, 31.122790222778928, 0.9750705505791702, 0.05639961413172677, 0.9809613647685271, 2.0740219704094227},
    {0.7000802783071498, 4.393540406660054, 0.21727184399314245, 0.772608655363091, 0.09143402450857169, -1.3319760794539368},
    {65.38165009569312, 13.993305911669028, 0.8231879568273622, 0.4697917170228805, 0.8264325239927228, 0.9401610607470726},
    {2964.229673026156, 4310.573839336135, 0.4185292829775918, 0.9723668005530934, 0.40745677527083435, -0.2340920076539946},
    {2.4437071981715923, 89.58801525838, 0.045386448044783895, 0.8713420715161159, 0.023198746774601382, -1.991759120339259},
    {9.292252566192035, 6.664169348140602, 0.4965025858697934, 0.24053204160024555, 0.5858753561843922, 0.21694746374600346},
    {1.148648288337519, 3617.9384656780962, 6.62270135341254e-06, 0.01266991364580521, 0.0002315169617601771, -3.5012772169801445},
    {1.508116478395254, 8.134039829275519, 0.021663702001550017, 0.05201838221753424, 0.13250456885471562, -1.1146296998983338},
    {202.4729083528627, 10.11085848942256, 0.9520264245409285, 0.4500684367927488, 0.9538522643659146, 1.6834114343019635},
    {1049.6463801516575, 21.923650857115103, 0.9819766643537857, 0.6974087556226096, 0.979838308188541, 2.0504208157253894},
    {1231.3896001843164, 7.655098807414136, 0.9899077545020516, 0.054893110386822895, 0.9940854394863693, 2.5172013393251778},
    {4914.036038852197, 321.64782990752855, 0.9299835036709653, 0.006230234393047899, 0.938622063063626, 1.5433087819275058},
    {76.12675227693916, 277.0756086094114, 0.229669266001002, 0.7454767412015044, 0.21499560323319716, -0.789206700365761},
    {296.8339257930815, 1278.6779674633203, 0.1854225143737194, 0.38571312191988016, 0.18827288074936593, -0.8842787407834567},
    {11.810469030204292, 2886.147550072995, 0.0037853786905893395, 0.4388225892080094, 0.003961926974920869, -2.65529729827212},
    {113.65693309926185, 0.8145104564202761, 0.997465192154886, 0.6577219784121883, 0.9954743824628116, 2.6101128796635393},
    {1.8137898264265366, 4599.052740098016, 3.942278730820568e-07, 6.272661596271116e-06, 0.0003246658985659034, -3.410124714000618},
    {42.737892273983114, 29.971998956922654, 0.6183201859728399, 0.6976277776732454, 0.5885957215357348, 0.22393413154274422},
    {1.2721542227013318, 28.66569797263649, 0.024033897799699794, 0.38140709347609386, 0.03273827286976538, -1.8419904572819092},
    {1.8830417091589677, 181.52216897442847, 0.011995989556282179, 0.6767915384337575, 0.00854867457401185, -2.384607560076075},
    {2163.4931623400507, 342.60421567011775, 0.8705804425782667, 0.8564073731652007, 0.8633883857824465, 1.0956699713868872},
    {4.569901935086323, 124.07258358584002, 0.010734221557769298, 0.023194901768301586, 0.033140263382187646, -1.836521760774249},
    {254.36602032224977, 28.321749725208136, 0.8798823377535085, 0.13382019275525342, 0.9007553945674189, 1.2858677778239693},
    {1641.142208194712, 2267.0031088741034, 0.4334953844296847, 0.9568538277521943, 0.4199149951648468, -0.20211094657814288},
    {54.24730406731986, 2.765172228705196, 0.9474803545692216, 0.3733083055737663, 0.9567008157634213, 1.7136209223663055},
    {2281.1355239724285, 2.1816340138399757, 0.9989470206635416, 0.35513755169838357, 0.999185652223429, 3.150718188661323},
    {3721.2047645227385, 20.86259601056574, 0.9937278442893098, 0.2669074322591195, 0.99451269053822, 2.543505945522114},
    {465.3274667705734, 61.042404525527786, 0.8828617222158271, 0.4528868280284546, 0.8845177884636296, 1.1978782376616792},
    {156.31470804683823, 2.64536158128518, 0.976903119219759, 0.22217145487548823, 0.9853407135381526, 2.1791763122802914},
    {2.5068757587924293, 2.4534701755324373, 0.6743761040400003, 0.7694251259542124, 0.5061607002221917, 0.015443199194122272},
    {604.4391009316629, 16.17526724600943, 0.9791564792495359, 0.7867042215833869, 0.9744443520743892, 1.9505441556614294},
    {16.059754976920782, 32.73462100818867, 0.3445006534567572, 0.6026977743398851, 0.32677932614359895, -0.4488239610754582},
    {6.027123118676799, 3489.074613806044, 0.002226583731663307, 0.7849132986429689, 0.001630382222675255, -2.942022300074511},
    {0.6326889785648817, 0.6589148881164877, 0.6987435858810448, 0.6650457887486891, 0.4834885265406253, -0.04139994946994674},
    {3.863226231321202, 25.068288746702642, 0.08584632043357424, 0.23958046670061522, 0.12506546243707056, -1.1500314335940938},
    {0.7945656625126525, 242.5651032501158, 3.264984974966905e-06, 0.003690307545174624, 0.002044426718816056, -2.8712242517144784},
    {7.311002955593359, 2717.6849372786533, 0.0032390997197996024, 0.7414516648818041, 0.002562283488963683, -2.799097445713751},
    {357.42548149885295, 7.346541306322461, 0.9753604220115657, 0.24528414453580275, 0.9807308458542457, 2.0690828978666826},
    {0.7503724403246717, 2.567037129254572, 0.008310890209488664, 0.05822446608780043, 0.16923566589856767, -0.9571900628430654},
    {5.5441527881393124, 47.20010470072967, 0.12401598449962792, 0.7059495914715423, 0.1001265355284016, -1.2808308913704254},
    {897.0228900061604, 95.92051855866438, 0.9035879766026769, 0.4965646198205776, 0.9036686300217366, 1.3027423455806135},
    {93.13300134698467, 2834.111179000271, 0.03503874232545688, 0.8402273360510768, 0.03170935220286361, -1.856244580429648},
    {2313.0957400878647, 6.659297460102198, 0.9964055406317295, 0.23259486673749774, 0.9972708714767462, 2.778666272617089},
    {9.291827306422181, 26.358696464083042, 0.2876704125140528, 0.6621801085725617, 0.2561204533853814, -0.6553523751330486},
    {0.69853017632876, 2624.870377035824, 0.0001770367383607774, 0.5375229830505805, 0.00015469305701783792, -3.607311530155383},
    {92.50115558474518, 127.94578049470037, 0.42830229568768424, 0.6057043845808805, 0.4193638004922722, -0.20352129753344406},
    {4.520338752582389, 1.2704149909319071, 0.6628514712555847, 0.21693400893882298, 0.8139184765423643, 0.89242897385353},
    {228.6589641109907, 240.4032694128092, 0.4695187663039975, 0.21833544879512376, 0.487463271848558, -0.03143009119499295},
    {3.1062348254533876, 2434.941638311815, 0.002127380715682616, 0.8790205569054542, 0.0011405732097519647, -3.0509551560122006},
    {1292.757391057141, 8.644773244019914, 0.9965845638728464, 0.9501958058576205, 0.9936083743620375, 2.4897512962106814},
    {1363.1845382891404, 314.01698064968843, 0.8215256819533505, 0.8204322139584441, 0.8128975970522272, 0.8886247112050258},
    {61.1459778190497, 29.49387904281023, 0.6467029029071616, 0.2796934154232577, 0.6758930381002948, 0.45624484082734706},
    {4721.489395814089, 10.524597548348094, 0.997687033172598, 0.4089152559426001, 0.99784560214865, 2.8546228984227398},
    {0.8733401150755398, 11.726277017181104, 0.15704741363855476, 0.8905884651126144, 0.04779104661096567, -1.6666596868306887},
    {250.0912640875068, 56.78565428614559, 0.8317045401996376, 0.7711338890146672, 0.8156410114339003, 0.8988773811086351},
    {43.44839712283177, 1.4658333541084556, 0.9999673637210625, 0.9999481758946387, 0.9740318374642979, 1.9436611615385344},
    {0.6367038724634331, 92.29947928314475, 0.012679943796071975, 0.8284206760712658, 0.0037819430818263797, -2.6709413499905224},
    {1.2454391619462057, 3.327763796973423, 0.00027233411093576914, 0.0001498796462276343, 0.23736282308572001, -0.7148113090531178},
    {5.563983730800252, 3736.3450997420473, 0.00213538634032971, 0.8523100530778935, 0.0013991163096537579, -2.98907518949201},
    {3714.048209539659, 20.823855179294608, 0.9922591754114679, 0.04847974468948312, 0.9945124913521113, 2.5434932643550847},
    {371.76714008335006, 2070.305526482936, 0.1585432610876389, 0.8081792123253283, 0.15213932185870765, -1.0273012292987638},
    {16.580183305455762, 110.09312163866996, 0.15067758388515912, 0.7572648074362466, 0.1289451567660325, -1.1313915807740738},
    {332.6719320146911, 2.33188166209885, 0.9964815244064749, 0.7610110016236569, 0.993993121293003, 2.511739971850006},
    {14.156006597310983, 41.259703987404855, 0.34423060147414297, 0.9290382211979616, 0.25249227905605515, -0.6666674758466677},
    {14.965341883387753, 2961.0474870403973, 0.006948878462151944, 0.9206876261585275, 0.004918203345836685, -2.5815278064721565},
    {2.052925477171344, 171.42794626179284, 0.02490281907549053, 0.9253940779897974, 0.01001577804548351, -2.325756282133623},
    {4393.440238760022, 216.4606913519608, 0.9530713870789128, 0.4950663092735849, 0.9531099018796688, 1.6757855973646527},
    {1242.499399904964, 7.326471422744039, 0.9949951836411677, 0.6156125631306729, 0.9943994635410812, 2.5363624717286037},
    {2.1399128592047805, 4882.02199215537, 0.0009186114444803652, 0.9264280268857853, 0.00037214900692401985, -3.372719253150113},
    {1265.624374348631, 31.13680511790737, 0.9782772384949856, 0.690697974902459, 0.9762331334832585, 1.9815133563858718},
    {413.4771006553086, 7.581181036725721, 0.9779705063336891, 0.24303061414992333, 0.9827528562218338, 2.11424569903767},
    {9.058668138538867, 4423.95408947121, 0.002526671821786709, 0.7798563734962918, 0.0019690704462182146, -2.883074660131194},
    {7.00778026123819, 84.65089644693533, 0.04527564484266611, 0.1163430731385768, 0.07338305649508878, -1.4510493710510863},
    {40.75444115985618, 29.764921602133132, 0.5971239756274387, 0.6233520827420297, 0.5786591660139057, 0.19846448620349583},
    {4694.577208596313, 29.503610467063808, 0.9929042453087733, 0.22034141285851544, 0.9938241805883979, 2.5019356064699108},
    {1.2357736252142544, 78.33364084607574, 0.015470813312583783, 0.6149455450958541, 0.011696044968065703, -2.266969484250791},
    {9.006900908929218, 5.801565619227203, 0.6213066128716281, 0.5251184962446528, 0.6132226310833279, 0.28772828375394505},
    {62.814279760950555, 24.179533962532236, 0.7695260583530127, 0.8388452498184984, 0.7237628538009226, 0.5940565474124796},
    {27.14025810701795, 0.6375684396741216, 0.9999770475764689, 0.989979908784438, 0.9871077720508291, 2.2294428191590425},
    {8.668505587999851, 17.629209866674454, 0.41881379561662824, 0.8357394482150808, 0.3252515362009481, -0.4530634233780836},
    {303.9568297582744, 37.376065700970486, 0.8962757097794727, 0.6185192054438444, 0.8912624131585856, 1.2332696594362713},
    {1385.3650885315155, 29.728342313740367, 0.9785237691216603, 0.42816716294151286, 0.9792172526818811, 2.037844418187022},
    {1713.1029269474627, 3312.8916032460243, 0.3410707024040322, 0.5145102233149793, 0.34082743381595604, -0.4102059621680922},
    {5.9371968657218295, 9.77486648393627, 0.23165128415575734, 0.1085630359329042, 0.3725702217040455, -0.325053681964245},
    {3520.0763619916547, 2.0356269495285226, 0.999963848832245, 0.9933118166329057, 0.999513342738726, 3.298128870688146},
    {14.299348932368241, 226.18944265695853, 0.05468353300031917, 0.405023433295486, 0.05824058685878428, -1.569716100909632},
    {3870.7463332784323, 28.93077883666235, 0.9940417846738482, 0.8596816714890771, 0.9926652839983652, 2.440438782519926},
    {0.5984162172633842, 4.101620287663612, 0.11333437788125726, 0.6035037066736557, 0.07725105589544784, -1.4238078185673535},
    {2.7702181468040687, 176.19776970759304, 0.0162045527431248, 0.6078483723619237, 0.013712209490330583, -2.205423093777177},
    {27.262956061440626, 58.567758811553766, 0.34254733874489823, 0.6970782608335079, 0.31621395107433475, -0.4783123576491537},
    {0.9668562736702492, 14.179948083092539, 0.04240330584861055, 0.47505935030474766, 0.04560353801990978, -1.689064468665218},
    {8.00754997304955, 2178.212522245001, 0.005541461749432608, 0.9153619385618565, 0.0035125164445445126, -2.6956552668171723},
    {0.9726942127296528, 57.19989210389076, 0.02289600687766261, 0.7438419948802489, 0.01159140912019517, -2.2704083514707993},
    {3.2481338687883854, 2472091.42208011, 1.6328663164579774e-06, 0.7221149578168944, 1.1818210399289381e-06, -4.719552354956513},
    {13.447831123231468, 1925046.0615089454, 7.505127006660861e-06, 0.63934816487875, 6.813301738095034e-06, -4.349793107059659},
    {6.380510932273447, 5117334.429958421, 1.4422545460847327e-06, 0.6941742142867646, 1.1823431988160827e-06, -4.719462492966099},
    {4.229758746895128, 66390828.524748296, 7.554256025181907e-08, 0.6988777350521638, 5.87656901570309e-08, -5.297293998872436},
    {11.24719724864562, 154257.76847779454, 7.087504545342455e-05, 0.5021898839687973, 7.075772558402738e-05, -3.805504482582559},
    {10.72792801142799, 6039719.613722854, 1.8858863107296531e-06, 0.6177873093920829, 1.7213517169220948e-06, -4.642468976590875},
    {35.83382615140123, 402517.71231929766, 8.743326520037208e-05, 0.4795427979159594, 8.818977946537354e-05, -3.7506460131131356},
    {19.57112648368962, 41167761.988704436, 3.947827401982726e-07, 0.2355150953647649, 4.673271411761005e-07, -4.904919993668311},
    {10.480066133656768, 143976.33352841059, 7.972887509152829e-05, 0.6561385201856641, 7.048375064508213e-05, -3.806464525892611},
    {35.69854145374618, 25978029.329721022, 1.0334451064270745e-06, 0.05840027897061985, 1.361370371189009e-06, -4.690698395347596},
    {17.27005759313874, 129120.61021476726, 0.0001301669699861945, 0.4874935148773108, 0.00013116197707897537, -3.6499180817324826},
    {31.973717620976096, 8615709.4723455, 2.66283434101131e-06, 0.04289171696634783, 3.6724653121290827e-06, -4.4834398700816775},
    {29.12018904869462, 3837629.494794064, 7.490386124102794e-06, 0.4968723759510495, 7.5013310094288416e-06, -4.3286492887925485},
    {6.719329305107886, 15513765.057999475, 4.975790813959535e-07, 0.6899348959938385, 4.1183390607497293e-07, -4.929674392158216},
    {34.844394447474706, 55502604.86943237, 4.4732563900091673e-07, 0.033195686432174625, 6.218016756472347e-07, -4.848560929696552},
    {39.999645292364164, 510307.56972347124, 8.03363963705807e-05, 0.5829391896492434, 7.772519060685676e-05, -3.7821968023877375},
    {24.107716789030526, 2472585.1080763647, 8.558974331695554e-06, 0.28862755627128894, 9.615438432006085e-06, -4.273638462213726},
    {48.417648308047454, 35185274.68873041, 1.233962794671832e-06, 0.24302703808681617, 1.3666131981995552e-06, -4.689911948707749},
    {14.651444514342348, 2418749.878893986, 5.9262887360183045e-06, 0.5015628000241907, 5.92016995399834e-06, -4.380507164610786},
    {3.0978797914438214, 22981925.00485904, 9.798181485962209e-08, 0.3676902294719078, 1.206026764843941e-07, -5.164404679985887},
}};

inline constexpr std::array<MomentPoint, 26> kMoments{{
    {-3.0, -1.0, -1.510049513243984, 2.4537024373725145, -4.304760236246075, 8.138644839032429},
    {-2.0, 1.0, -0.22963717909132897, 0.5724957732325571, -0.4910444895978729, 0.8942489975780001},
    {-2.0, 2.0, 0.0, 0.7737413035499232, 0.0, 1.4161891248494627},
    {-1.0, 1.0, 0.0, 0.2911250947727932, 0.0, 0.16450037909117285},
    {-1.0, 2.0, 0.22963717909132897, 0.5724957732325571, 0.4910444895978729, 0.8942489975780001},
    {1.0, 3.0, 1.510049513243984, 2.4537024373725145, 4.304760236246075, 8.138644839032429},
    {1.1984016315679238, 2.6872119865381405, 1.6440875844759693, 2.8266125011485483, 5.091132952406514, 9.60308639376046},
    {-1.944012254443737, -0.6675007730600007, -1.1445011451839149, 1.4238207229507995, -1.9106769718287857, 2.7334983206176218},
    {0.6812122114394832, 3.393366488804887, 1.2728957999311605, 1.8533028661975928, 3.080211928037216, 5.764949083810637},
    {-2.3746021115036697, -0.8442339805978594, -1.3415813164845622, 1.9414434811059438, -3.024020269643845, 5.034164926016069},
    {2.1929014594790335, 2.975788971000081, 2.4627878741379265, 6.106864413052042, 15.250178919990853, 38.3598552694629},
    {0.8705462578477734, 2.9755804341106065, 1.4083602561291986, 2.173374732446645, 3.6814795700998606, 6.806610169138929},
    {-3.116282584817233, -0.709533250723156, -1.2897178426905571, 1.8837033045433091, -3.1086187763491386, 5.721705184575107},
    {0.7006275091210199, 2.8194224797643397, 1.2726387735689069, 1.8253006340351352, 2.9364510085539757, 5.222582095625477},
    {0.6253089053682217, 1.1362686137546136, 0.8618547913355378, 0.7641483668028239, 0.6958745440732677, 0.6494110420375893},
    {-3.913359421794995, -0.1147382987109693, -0.8720077228734006, 1.098476030377683, -1.7491444111644951, 3.271871125766843},
    {1.083392253224467, 2.1613335539484893, 1.4779721002530557, 2.2656623825844386, 3.6018934668776654, 5.929275769279227},
    {0.7699100195503465, 1.6430854838766449, 1.1330570169589107, 1.3426109821533114, 1.6594839672730128, 2.1306248457460883},
    {-1.8808605898751245, 2.0767855672290993, 0.022989199324681544, 0.7646464053578955, 0.08966587687599051, 1.3831736227709608},
    {1.5328555857655974, 4.133652983687544, 1.9659836900718641, 4.01034232711497, 8.533049151121121, 19.028685052775305},
    {1.4853190846753037, 4.480071688649467, 1.9260509479742254, 3.8600385398880537, 8.096759290992749, 17.869498320209768},
    {-0.8246796462043648, 1.251403307486337, 0.14730127751819438, 0.32979432303300715, 0.16062586022853492, 0.240555102620573},
    {-3.8184346952336337, -1.2270463385902297, -1.7084095871854372, 3.089876812530386, -5.9566770159527245, 12.292533896078435},
    {-1.9972266703338453, 0.11724030144502162, -0.6528097466703263, 0.7042884732853067, -0.9025448184836297, 1.2858480578366849},
    {0.7152772438347519, 4.460568277574221, 1.3020998496752179, 1.931061266526536, 3.268823446635441, 6.262582654243253},
    {0.8880967698957685, 1.6650662723527772, 1.2146155363574658, 1.522342564652876, 1.9667562524995823, 2.6138452423784524},
}};

inline constexpr std::array<SigmaPoint, 6> kSigmaIntegrals{{
    {-3.0, -1.0, 0.173452904924122, -0.299774032523066, 0.529497296966152},
    {-2.0, 1.0, 0.5197625392115339, -0.17978908759551973, 0.14162439680221423},
    {-2.0, 2.0, 0.7737413035499232, -1.3877787807814457e-17, 0.20437838000758202},
    {-1.0, 1.0, 0.29112509477279314, -6.938893903907228e-18, 0.019936639571176244},
    {-1.0, 2.0, 0.5197625392115339, 0.17978908759551968, 0.14162439680221417},
    {1.0, 3.0, 0.17345290492412177, 0.29977403252306545, 0.5294972969661508},
}};

inline constexpr double kDensityAt0 = 0.5843685672568166;
inline constexpr double kQuantileQuarter = -0.7474407239640593;
inline constexpr double kLatentNl = 19.381419226895726;
inline constexpr double kLatentNu = 2.779169512692896;
inline constexpr double kUmvuLower = -1.2257141402101217;  // mu 0, sigma 1, -0.9, 1.8, n 10
inline constexpr double kUmvuUpper = 2.897752433415789;
inline constexpr double kXiTwoOne = -0.5449521356173603;

inline constexpr std::array<double, 5> kCsData{-0.5434745377340992, -0.15596156240739312, 0.22023776690614882, 1.0713542975354355, 1.5983495516593467};
inline constexpr std::array<double, 2> kCsCounts{1.3, 0.7};
inline constexpr std::array<double, 4> kCsTheta{0.1, 1.2, -1.5, 1.9};
inline constexpr std::array<double, 4> kCsExpected{0.19652821754189356, 0.10245494411164256, 0.437133330691132, 0.6792002217287934};

inline constexpr std::array<double, 20> kSsData{-1.678837191877164, -1.2391428752538713, -1.1444921999331585, -0.8240728529091629, -0.6356427538915856, -0.5952784464359817, -0.5255292822892713, -0.4692149596813582, -0.33398895518618754, -0.29078244560547584, -0.18855069092333213, -0.1514596547570636, -0.035059901117374746, 0.13501420395564956, 0.18275087946602825, 0.39796797352043284, 0.6070952986378887, 0.6315387663140412, 0.8809814770700996, 1.3897604291375798};
inline constexpr std::array<double, 2> kSsCounts{0.47669226271444354, 0.47669226271444354};
inline constexpr std::array<double, 4> kSsExpected{-0.19434715908796338, 0.8631696944305669, -2.1405661109762306, 1.9566244383821465};

}  // namespace oracle
