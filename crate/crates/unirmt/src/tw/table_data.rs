// Type-1 Tracy-Widom CDF on s = -10.00(0.01)6.00.
// Generated by `cargo run --release --example regen_tw_table`;
// see tw::painleve for the Painleve II integration behind it.
pub(super) const TW1_S_MIN: f64 = -10.0;
pub(super) const TW1_S_STEP: f64 = 0.01;
pub(super) const TW1_CDF: [f64; 1601] = [
    3.4953214602758314e-22, 3.9884275931986835e-22, 4.550683273605904e-22, 5.19169698355071e-22,
    5.922396614484483e-22, 6.755208116807033e-22, 7.7042579569791275e-22, 8.785602499823334e-22,
    1.0017487834230743e-21, 1.1420644011529228e-21, 1.3018618173454626e-21, 1.4838151617984023e-21,
    1.690960649400573e-21, 1.92674485386982e-21, 2.1950793084288575e-21, 2.500402247455415e-21,
    2.8477484058241958e-21, 3.242827908019291e-21, 3.692115408670929e-21, 4.202950791670294e-21,
    4.783652898354479e-21, 5.443647938566165e-21, 6.193614444075062e-21, 7.045646854551404e-21,
    8.013440085004321e-21, 9.112497713640214e-21, 1.0360366754181986e-20, 1.1776902340942946e-20,
    1.3384566062991431e-20, 1.52087621406932e-20, 1.7278216149540728e-20, 1.962540156881907e-20,
    2.228702007344417e-20, 2.5304542204173037e-20, 2.872481585310104e-20, 3.2600750897787386e-20,
    3.699208931935496e-20, 4.1966271259679444e-20, 4.75994087237732e-20, 5.3977380030741174e-20,
    6.119705967685858e-20, 6.936770001601508e-20, 7.861248310646114e-20, 8.907026324149138e-20,
    1.0089752310065859e-19, 1.1427056915551964e-19, 1.2938799497123942e-19, 1.464734443968896e-19,
    1.6577871037190353e-19, 1.8758720923610105e-19, 2.1221787506365095e-19, 2.400295236990824e-19,
    2.7142574191484417e-19, 3.0686036349812775e-19, 3.468436011817508e-19, 3.919489112382044e-19,
    4.428206763442079e-19, 5.001828020925534e-19, 5.648483333842126e-19, 6.377302089953515e-19,
    7.198532860103152e-19, 8.123677806878377e-19, 9.165642888414555e-19, 1.0338905671431654e-18,
    1.1659702770943e-18, 1.314623915964352e-18, 1.4818921840132035e-18, 1.6700620650443665e-18,
    1.8816959280745883e-18, 2.1196639919653668e-18, 2.3871805325929448e-18, 2.6878442539207724e-18,
    3.025683290605161e-18, 3.405205360979527e-18, 3.831453645936695e-18, 4.3100690319311485e-18,
    4.847359425673256e-18, 5.450376924774671e-18, 6.127003713376526e-18, 6.8860476454850054e-18,
    7.737348582255443e-18, 8.691896663816722e-18, 9.761963822501055e-18, 1.0961249983762323e-17,
    1.2305045554938101e-17, 1.381041197181432e-17, 1.5496382260261627e-17, 1.7384183776804566e-17,
    1.9497485519771073e-17, 2.1862672653753137e-17, 2.4509151166825352e-17, 2.7469685884829237e-17,
    3.078077540281818e-17, 3.4483067863536346e-17, 3.8621821919863535e-17, 4.324741766619495e-17,
    4.8415922816689634e-17, 5.4189719950614774e-17, 6.063820124138367e-17, 6.783853774160911e-17,
    7.587653101720736e-17, 8.484755571564215e-17, 9.48576025235106e-17, 1.0602443192438233e-16,
    1.184788502172259e-16, 1.3236612040776738e-16, 1.478475218494513e-16, 1.6510207389795065e-16,
    1.8432844036482548e-16, 2.0574703322474955e-16, 2.296023358602999e-16, 2.561654681336674e-16,
    2.8573701777224426e-16, 3.1865016496238073e-16, 3.552741296824383e-16, 3.9601797419336605e-16,
    4.4133479626557107e-16, 4.917263521797159e-16, 5.477481523236478e-16, 6.100150763471435e-16,
    6.792075593635578e-16, 7.560784056362101e-16, 8.414602915977358e-16, 9.362740259615311e-16,
    1.0415376411426841e-15, 1.158376397258986e-15, 1.288033787684078e-15, 1.4318836435321502e-15,
    1.5914434436286222e-15, 1.7683889465323346e-15, 1.964570272094319e-15, 2.182029571946638e-15,
    2.4230204412978805e-15, 2.690029238562804e-15, 2.9857984947739906e-15, 3.313352611522634e-15,
    3.6760260644725075e-15, 4.077494349413745e-15, 4.521807929511208e-15, 5.013429466005542e-15,
    5.5572746403062536e-15, 6.158756903352605e-15, 6.823836518497563e-15, 7.559074297200038e-15,
    8.371690462712696e-15, 9.269629115966876e-15, 1.0261628820240532e-14, 1.1357299867229861e-14,
    1.2567208837135848e-14, 1.3902971119640202e-14, 1.537735212154442e-14, 1.700437795074805e-14,
    1.879945643556616e-14, 2.077950941356383e-14, 2.296311730560078e-14, 2.5370677079130765e-14,
    2.8024574800550155e-14, 3.094937408013113e-14, 3.417202182542926e-14, 3.772207284073283e-14,
    4.163193494184132e-14, 4.593713639802953e-14, 5.0676617667327374e-14, 5.589304955811464e-14,
    6.16331801305405e-14, 6.794821284641505e-14, 7.489421868719671e-14, 8.253258518766462e-14,
    9.093050557921584e-14, 1.0016151150278649e-13, 1.1030605303874311e-13, 1.214521301113105e-13,
    1.336959796599342e-13, 1.4714282333133362e-13, 1.6190768083577885e-13, 1.7811625453161075e-13,
    1.9590589125533008e-13, 2.1542662790337827e-13, 2.3684232779842407e-13, 2.6033191544056423e-13,
    2.860907178552333e-13, 3.14331921408055e-13, 3.452881536658396e-13, 3.792132006460113e-13,
    4.1638387061811673e-13, 4.571020165044542e-13, 5.016967298775084e-13, 5.505267205736602e-13,
    6.039828970416308e-13, 6.624911637249791e-13, 7.265154530471102e-13, 7.965610109305517e-13,
    8.731779562465986e-13, 9.569651361636493e-13, 1.0485743010505898e-12, 1.1487146244027975e-12,
    1.258157595202323e-12, 1.377742312208561e-12, 1.5083812119118493e-12, 1.6510662642799838e-12,
    1.8068756729971883e-12, 1.976981119649297e-12, 2.162655594259493e-12, 2.3652818577390142e-12,
    2.586361585201942e-12, 2.82752524271623e-12, 3.0905427539412606e-12, 3.3773350172518297e-12,
    3.689986338388276e-12, 4.030757848420102e-12, 4.402101981887772e-12, 4.8066780954146955e-12,
    5.247369312882058e-12, 5.727300689456843e-12, 6.2498587933835514e-12, 6.818712811521715e-12,
    7.437837292158805e-12, 8.111536646687775e-12, 8.844471540337046e-12, 9.641687311315403e-12,
    1.0508644567520935e-11, 1.1451252120398324e-11, 1.247590242665492e-11, 1.3589509720403675e-11,
    1.4799551030938512e-11, 1.611411029480696e-11, 1.75419257851858e-11, 1.9092441096827755e-11,
    2.0775859941104633e-11, 2.2603205022960766e-11, 2.458638129000625e-11, 2.6738243863543534e-11,
    2.9072670982149598e-11, 3.160464231057036e-11, 3.435032299021307e-11, 3.7327153832528005e-11,
    4.055394808313903e-11, 4.40509952128036e-11, 4.784017222124073e-11, 5.194506297169106e-11,
    5.639108610782958e-11, 6.12056321404887e-11, 6.641821032965817e-11, 7.206060602754263e-11,
    7.816704919121616e-11, 8.477439481870677e-11, 9.192231611040263e-11, 9.96535112085306e-11,
    1.0801392442137101e-10, 1.1705298289598046e-10, 1.2682384976359477e-10, 1.3738369484589942e-10,
    1.4879398407803972e-10, 1.611207888758669e-10, 1.7443511675070442e-10, 1.8881326455500034e-10,
    2.0433719582695852e-10, 2.2109494379174122e-10, 2.3918104167144936e-10, 2.5869698205596825e-10,
    2.7975170719236336e-10, 3.0246213216189364e-10, 3.2695370303137637e-10, 3.5336099218972733e-10,
    3.818283332115417e-10, 4.1251049772767733e-10, 4.4557341692855237e-10, 4.811949504794193e-10,
    5.19565705788802e-10, 5.608899107419241e-10, 6.053863431906118e-10, 6.532893206805257e-10,
    7.048497540958825e-10, 7.603362691116131e-10, 8.200363995638007e-10, 8.842578570815847e-10,
    9.533298815681073e-10, 1.0276046773750344e-9, 1.1074589402856741e-9, 1.1932954807054572e-9,
    1.2855449487572337e-9, 1.3846676672923755e-9, 1.4911555791579579e-9, 1.6055343154062865e-9,
    1.728365391495959e-9, 1.8602485389146116e-9, 2.0018241800535414e-9, 2.153776054583494e-9,
    2.316834006020678e-9, 2.4917769376334762e-9, 2.679435947323025e-9, 2.8806976516177894e-9,
    3.0965077094525363e-9, 3.3278745569576666e-9, 3.5758733650669445e-9, 3.841650232360287e-9,
    4.126426626196101e-9, 4.4315040858543e-9, 4.758269202108285e-9, 5.108198888374381e-9,
    5.482865959348954e-9, 5.883945033840871e-9, 6.313218779339722e-9, 6.772584516729736e-9,
    7.264061204468474e-9, 7.789796822497118e-9, 8.352076177139926e-9, 8.953329149283092e-9,
    9.59613940920084e-9, 1.0283253622522358e-8, 1.1017591173001566e-8, 1.1802254428977957e-8,
    1.264053958168666e-8, 1.3535948084903795e-8, 1.4492198726794118e-8, 1.551324036626667e-8,
    1.6603265367643386e-8, 1.7766723769000607e-8, 1.9008338221167902e-8, 2.0333119736055484e-8,
    2.1746384284732436e-8, 2.3253770287503715e-8, 2.4861257040128364e-8, 2.6575184122288622e-8,
    2.840227183646816e-8, 3.0349642727513596e-8, 3.2424844235368715e-8, 3.463587253574847e-8,
    3.6991197625898814e-8, 3.9499789715050284e-8, 4.217114698172333e-8, 4.501532476269405e-8,
    4.804296624116752e-8, 5.1265334704552116e-8, 5.469434744516522e-8, 5.834261138025596e-8,
    6.222346047088063e-8, 6.635099502242814e-8, 7.07401229529808e-8, 7.540660311917624e-8,
    8.036709079285548e-8, 8.56391853855181e-8, 9.124148052144645e-8, 9.719361656437305e-8,
    1.0351633570665157e-7, 1.1023153973415884e-7, 1.1736235058452991e-7, 1.2493317382086311e-7,
    1.329697651476758e-7, 1.4149930010073415e-7, 1.5055044704730074e-7, 1.6015344363849355e-7,
    1.703401768606748e-7, 1.8114426683824205e-7, 1.9260115454574372e-7, 2.0474819359301323e-7,
    2.176247462529005e-7, 2.3127228390726072e-7, 2.4573449209311635e-7, 2.610573803373131e-7,
    2.772893969746069e-7, 2.94481549150863e-7, 3.126875282200354e-7, 3.319638407507103e-7,
    3.5236994536533286e-7, 3.7396839564274343e-7, 3.968249893223587e-7, 4.210089240561981e-7,
    4.465929599631042e-7, 4.73653589247698e-7, 5.022712131551824e-7, 5.325303265417254e-7,
    5.645197103490264e-7, 5.98332632280808e-7, 6.340670559881697e-7, 6.718258590803096e-7,
    7.1171706028673e-7, 7.538540561069645e-7, 7.983558672939643e-7, 8.453473955275703e-7,
    8.949596906449523e-7, 9.473302288056789e-7, 1.002603201979942e-6, 1.060929819159505e-6,
    1.122468619702349e-6, 1.187385799233455e-6, 1.255855548535832e-6, 1.3280604058777572e-6,
    1.4041916232344492e-6, 1.484449546874373e-6, 1.5690440127932073e-6, 1.6581947574906824e-6,
    1.752131844598819e-6, 1.8510961078826682e-6, 1.9553396111479787e-6, 2.065126125603649e-6,
    2.1807316252400584e-6, 2.3024448007981656e-6, 2.430567592918097e-6, 2.565415745069614e-6,
    2.7073193768811704e-6, 2.856623578498356e-6, 3.0136890266166326e-6, 3.1788926228480535e-6,
    3.3526281550957148e-6, 3.535306982624642e-6, 3.727358745532171e-6, 3.929232099335996e-6,
    4.141395475412378e-6, 4.364337868032205e-6, 4.598569648757479e-6, 4.8446234089752385e-6,
    5.103054831361506e-6, 5.374443591082152e-6, 5.659394287552884e-6, 5.958537407594852e-6,
    6.272530320837875e-6, 6.602058308237413e-6, 6.9478356245862944e-6, 7.310606595916595e-6,
    7.691146752701689e-6, 8.090263999782646e-6, 8.508799823957035e-6, 8.947630540182691e-6,
    9.407668577362011e-6, 9.889863804686425e-6, 1.0395204899533917e-5, 1.0924720757924948e-5,
    1.1479481948555393e-5, 1.2060602211437816e-5, 1.2669240002193265e-5, 1.3306600083048801e-5,
    1.3973935161606576e-5, 1.4672547578461545e-5, 1.5403791044755007e-5, 1.6169072430761916e-5,
    1.6969853606618373e-5, 1.780765333630602e-5, 1.8684049226017403e-5, 1.9600679728034714e-5,
    2.0559246201262544e-5, 2.1561515029559527e-5, 2.2609319799023122e-5, 2.3704563535383826e-5,
    2.4849221002672023e-5, 2.6045341064323938e-5, 2.729504910789456e-5, 2.8600549534550932e-5,
    2.99641283145172e-5, 3.13881556096461e-5, 3.287508846428805e-5, 3.4427473565631975e-5,
    3.604795007468465e-5, 3.773925252905638e-5, 3.950421381871375e-5, 4.134576823585476e-5,
    4.3266954600057674e-5, 4.5270919459843154e-5, 4.736092037178375e-5, 4.954032925828334e-5,
    5.1812635845136313e-5, 5.4181451179967114e-5, 5.665051123263266e-5, 5.922368057865841e-5,
    6.190495616675944e-5, 6.469847117148041e-5, 6.760849893197205e-5, 7.06394569778933e-5,
    7.37959111434147e-5, 7.708257977026656e-5, 8.050433800075624e-5, 8.406622216164519e-5,
    8.777343423975621e-5, 9.163134645013959e-5, 9.564550589760508e-5, 9.982163933238867e-5,
    0.00010416565800068247, 0.00010868366259072881, 0.00011338194827513405, 0.00011826700985001365,
    0.00012334554697154856, 0.0001286244694904739, 0.00013411090288498808, 0.00013981219379251218,
    0.00014573591564068602, 0.00015188987437792743, 0.00015828211430384112, 0.00016492092399968862,
    0.00017181484235908941, 0.00017897266471905856, 0.00018640344909141577, 0.0001941165224945546,
    0.0002021214873854751, 0.00021042822819193299, 0.00021904691794448152, 0.00022798802500810264,
    0.0002372623199130661, 0.0002468808822845742, 0.00025685510787066743, 0.00026719671566778635,
    0.0002779177551433187, 0.0002890306135543617, 0.00030054802336184906, 0.00031248306973911277,
    0.00032484919817385427, 0.00033766022216239985, 0.00035093033099506225, 0.000364674097631272,
    0.00037890648666311907, 0.00039364286236578586, 0.0004088989968332943, 0.000424691078197877,
    0.00044103571893117625, 0.00045794996422537275, 0.0004754513004522476, 0.0004935576636980741,
    0.0005122874483721198, 0.0005316595158864343, 0.0005516932034045061, 0.0005724083326562168,
    0.0005938252188164658, 0.000615964679444688, 0.0006388480434823709, 0.0006624971603055782,
    0.0006869344088293875, 0.0007121827066609732, 0.0007382655192980199, 0.0007652068693689919,
    0.0007930313459116705, 0.0008217641136862601, 0.0008514309225192522, 0.0008820581166740877,
    0.0009136726442445853, 0.0009463020665669305, 0.000979974567645951, 0.0010147189635912636,
    0.0010505647120587207, 0.0010875419216925663, 0.0011256813615634718, 0.0011650144705976073,
    0.00120557336699172, 0.0012473908576091112, 0.0012905004473512905, 0.0013349363484999194,
    0.0013807334900236411, 0.0014279275268441849, 0.0014765548490560903, 0.0015266525910942509,
    0.0015782586408433778, 0.001631411648683431, 0.0016861510364648302, 0.0017425170064073632,
    0.0018005505499163721, 0.0018602934563099259, 0.0019217883214504214, 0.0019850785562740706,
    0.0020502083952116043, 0.002117222904493416, 0.002186167990332361, 0.00225709040697723,
    0.002330037764629982, 0.002405058537219621, 0.002482202070025605, 0.002561518587143598,
    0.002643059198786287, 0.0027268759084119578, 0.0028130216196734993, 0.002901550143180302,
    0.0029925162030657497, 0.003085975443352628, 0.003181984434109041, 0.0032806006773871584,
    0.0033818826129372757, 0.0034858896236894792, 0.0035926820409953077, 0.003702321149621787,
    0.0038148691924900857, 0.003930389375151192, 0.004048945869990892, 0.004170603820156479,
    0.0042954293431974174, 0.004423489534412393, 0.004554852469895213, 0.004689587209271851,
    0.0048277637981211955, 0.004969453270071979, 0.005114727648568395, 0.005263659948297054,
    0.00541632417626796, 0.005572795332542137, 0.005733149410598849, 0.0058974633973351166,
    0.00606581527269067, 0.006238284008891291, 0.006414949569303607, 0.006595892906894847,
    0.006781195962290631, 0.006970941661424398, 0.007165213912772131, 0.007364097604165986,
    0.007567678599180726, 0.007776043733086979, 0.00798928080836543, 0.008207478589776225,
    0.00843072679897819, 0.008659116108692244, 0.00889273813640404, 0.009131685437600569,
    0.009376051498536151, 0.00962593072852293, 0.00988141845174149, 0.010142610898567347,
    0.010409605196409325, 0.01068249936005588, 0.010961392281525631, 0.011246383719419101,
    0.01153757428776811, 0.011835065444380025, 0.012138959478674263, 0.012449359499008397,
    0.012766369419491946, 0.01309009394628562, 0.013420638563384466, 0.01375810951788363,
    0.014102613804725363, 0.014454259150926437, 0.014813153999285423, 0.015179407491569753,
    0.015553129451181903, 0.015934430365305497, 0.016323421366531865, 0.01672021421396749,
    0.017124921273823895, 0.01753765549949115, 0.017958530411096876, 0.01838766007455278,
    0.018825159080091008, 0.019271142520292998, 0.01972572596761389, 0.020189025451405707,
    0.020661157434442856, 0.021142238788954142, 0.021632386772165193, 0.022131719001355972,
    0.022640353428438387, 0.023158408314059048, 0.02368600220123269, 0.024223253888512323,
    0.024770282402701724, 0.025327206971117323, 0.02589414699340607, 0.02647122201292621,
    0.027058551687698527, 0.027656255760935868, 0.028264454031158695, 0.0288832663219055,
    0.02951281245104612, 0.030153212199707468, 0.030804585280820525, 0.03146705130729844,
    0.03214072975985535, 0.03282573995447628, 0.033522201009548336, 0.034230231812664144,
    0.034949950987108146, 0.035681476858037534, 0.03642492741836876, 0.037180420294382066,
    0.037948072711055374, 0.03872800145714045, 0.03952032284999367, 0.040325152700174,
    0.04114260627582147, 0.0419727982668295, 0.04281584274882394, 0.043671853146963605,
    0.04454094219957499, 0.045423221921636205, 0.04631880356812414, 0.04722779759723894,
    0.04815031363352131, 0.04908646043087685, 0.05003634583552255, 0.0510000767488708,
    0.0519777590903659, 0.05296949776028905, 0.05397539660254685, 0.05499555836745941,
    0.0560300846745636, 0.057079075975447605, 0.058142631516632744, 0.05922084930251852,
    0.06031382605840731, 0.06142165719362459, 0.06254443676475163, 0.06368225743898635,
    0.06483521045764878, 0.0660033855998485, 0.06718687114632894, 0.0683857538435063,
    0.06960011886771933, 0.07083004978970536, 0.07207562853932015, 0.07333693537051822,
    0.07461404882660841, 0.07590704570580252, 0.07721600102707249, 0.07854098799633241,
    0.07988207797296198, 0.08123934043668632, 0.08261284295482904, 0.08400265114995412,
    0.085408828667912, 0.08683143714630515, 0.08827053618338984, 0.08972618330742779,
    0.09119843394650354, 0.09268734139882251, 0.0941929568035045, 0.09571532911188697,
    0.09725450505935271, 0.09881052913769554, 0.10038344356803888, 0.10197328827432049,
    0.10358010085735651, 0.10520391656949826, 0.10684476828989585, 0.10850268650037931,
    0.11017769926197163, 0.11186983219204545, 0.11357910844213424, 0.1153055486764115,
    0.11704917105084744, 0.11880999119305616, 0.12058802218284224, 0.12238327453345851,
    0.12419575617358455, 0.12602547243003592, 0.12787242601121376, 0.12973661699130298,
    0.13161804279522915, 0.13351669818438197, 0.135432575243113, 0.13736566336601586,
    0.13931594924599644, 0.14128341686313953, 0.1432680474743788, 0.14526981960397706,
    0.14728870903482105, 0.14932468880053795, 0.15137772917843778, 0.1534477976832866,
    0.15553485906191514, 0.15763887528866594, 0.15975980556168404, 0.1618976063000524,
    0.1640522311417768, 0.16622363094262105, 0.16841175377579518, 0.17061654493249756,
    0.17283794692331356, 0.17507589948046934, 0.17733033956094282, 0.1796012013504304,
    0.1818884162681709, 0.1841919129726233, 0.18651161736799887, 0.18884745261164565,
    0.19119933912228276, 0.1935671945890821, 0.19595093398159544, 0.19835046956052205,
    0.20076571088931489, 0.20319656484662013, 0.20564293563954628, 0.20810472481775816,
    0.21058183128838928, 0.2130741513317689, 0.21558157861795701, 0.21810400422408044,
    0.2206413166524639, 0.22319340184954992, 0.22576014322559815, 0.22834142167515872,
    0.2309371155983094, 0.23354710092265019, 0.23617125112604534, 0.23880943726010342,
    0.2414615279743885, 0.24412738954134924, 0.24680688588195857, 0.24949987859205328,
    0.2522062269693616, 0.2549257880412095, 0.2576584165928937, 0.26040396519670994,
    0.26316228424162597, 0.2659332219635856, 0.2687166244764326, 0.271512335803442,
    0.2743201979094469, 0.2771400507335454, 0.27997173222237765, 0.28281507836395675,
    0.2856699232220434, 0.2885360989710467, 0.2914134359314404, 0.2943017626056783,
    0.29720090571459595, 0.30011069023428366, 0.30303093943341647, 0.30596147491102527,
    0.30890211663469574, 0.3118526829791801, 0.31481299076540453, 0.31778285529985856,
    0.3207620904143528, 0.3237505085061243, 0.32674792057828106, 0.32975413628056327,
    0.332768963950411, 0.33579221065431886, 0.33882368222946446, 0.34186318332559223,
    0.34491051744714035, 0.34796548699559005, 0.3510278933120267, 0.3540975367198921,
    0.3571742165679147, 0.3602577312732017, 0.3633478783644754, 0.3664444545254402,
    0.36954725563826235, 0.372656076827148, 0.37577071250200295, 0.37889095640215864,
    0.3820166016401493, 0.3851474407455235, 0.3882832657086749, 0.39142386802467777,
    0.3945690387371108, 0.3977185684818536, 0.40087224753084266, 0.4040298658357693,
    0.4071912130717063, 0.41035607868064794, 0.4135242519149487, 0.4166955218806459,
    0.41986967758065213, 0.4230465079578036, 0.42622580193774895, 0.4294073484716667,
    0.43259093657879505, 0.43577635538876247, 0.43896339418370517, 0.4421518424401573,
    0.44534148987070116, 0.44853212646536667, 0.4517235425327628, 0.4549155287409337,
    0.45810787615792353, 0.46130037629204, 0.46449282113180357, 0.4676850031855707,
    0.4708767155208216, 0.47406775180309835, 0.477257906334585, 0.48044697409231707,
    0.48363475076601203, 0.4868210327955081, 0.4900056174078023, 0.4931883026536802,
    0.49636888744392366, 0.4995471715850909, 0.5027229558148577, 0.5058960418369124,
    0.509066232355395, 0.512233331108873, 0.5153971429038459, 0.5185574736477686,
    0.5217141303815912, 0.5248669213118015, 0.5280156558419681, 0.5311601446037757,
    0.5343001994875459, 0.5374356336722378, 0.540566261654922, 0.5436918992797236,
    0.5468123637662266, 0.5499274737373367, 0.5530370492465979, 0.5561409118049541,
    0.5592388844069577, 0.5623307915564166, 0.5654164592914769, 0.5684957152091378,
    0.5715683884891967, 0.574634309917619, 0.5776933119093319, 0.5807452285304389,
    0.5837898955198514, 0.5868271503103388, 0.5898568320489918, 0.5928787816170986,
    0.595892841649434, 0.598898856552958, 0.6018966725249251, 0.6048861375704022,
    0.607867101519197, 0.6108394160421926, 0.6138029346670945, 0.6167575127935838,
    0.619703007707883, 0.6226392785967303, 0.6255661865607675, 0.6284835946273392,
    0.6313913677627083, 0.6342893728836866, 0.6371774788686821, 0.6400555565681698,
    0.6429234788145803, 0.6457811204316177, 0.648628358243001, 0.6514650710806381,
    0.6542911397922329, 0.6571064472483272, 0.6599108783487847, 0.6627043200287166,
    0.6654866612638559, 0.6682577930753807, 0.6710176085341949, 0.6737660027646664,
    0.6765028729478301, 0.6792281183240583, 0.6819416401952044, 0.6846433419262247,
    0.6873331289462812, 0.6900109087493346, 0.6926765908942273, 0.6953300870042676,
    0.6979713107663151, 0.7006001779293775, 0.7032166063027202, 0.7058205157534992,
    0.7084118282039185, 0.7109904676279212, 0.7135563600474205, 0.7161094335280737,
    0.7186496181746085, 0.7211768461257083, 0.723691051548459, 0.7261921706323696,
    0.7286801415829681, 0.731154904614982, 0.7336164019451105, 0.7360645777843932,
    0.7384993783301842, 0.7409207517577375, 0.7433286482114104, 0.7457230197954937,
    0.7481038205646734, 0.7504710065141323, 0.7528245355692993, 0.7551643675752516,
    0.7574904642857799, 0.7598027893521208, 0.7621013083113652, 0.7643859885745512,
    0.7666567994144459, 0.7689137119530257, 0.7711566991486626, 0.7733857357830212,
    0.7756007984476769, 0.7778018655304614, 0.7799889172015417, 0.7821619353992422,
    0.7843209038156148, 0.7864658078817667, 0.7885966347529509, 0.7907133732934293,
    0.7928160140611121, 0.7949045492919853, 0.7969789728843286, 0.7990392803827355,
    0.8010854689619388, 0.8031175374104516, 0.8051354861140291, 0.8071393170389592,
    0.8091290337151887, 0.8111046412192907, 0.8130661461572832, 0.8150135566473027,
    0.8169468823021409, 0.8188661342116519, 0.8207713249250352, 0.8226624684330028,
    0.8245395801498349, 0.8264026768953329, 0.8282517768766756, 0.8300868996701833,
    0.8319080662029992, 0.8337152987346913, 0.8355086208387839, 0.8372880573842226,
    0.8390536345167796, 0.8408053796404064, 0.8425433213985382, 0.8442674896553571,
    0.8459779154770192, 0.8476746311128514, 0.8493576699765244, 0.8510270666272063,
    0.8526828567507029, 0.8543250771405901, 0.8559537656793439, 0.8575689613194725,
    0.8591707040646568, 0.8607590349509041, 0.8623339960277182, 0.8638956303392943,
    0.8654439819057406, 0.8669790957043321, 0.8685010176508027, 0.8700097945806778,
    0.8715054742306542, 0.8729881052200297, 0.8744577370321882, 0.875914419996145,
    0.8773582052681534, 0.878789144813381, 0.8802072913876554, 0.8816126985192876,
    0.8830054204909723, 0.8843855123217729, 0.885753029749192, 0.8871080292113326,
    0.8884505678291523, 0.8897807033888154, 0.8910984943241441, 0.892403999699174,
    0.8936972791908162, 0.8949783930716282, 0.8962474021926985, 0.8975043679666458,
    0.8987493523507366, 0.8999824178301242, 0.9012036274012108, 0.9024130445551357,
    0.903610733261392, 0.9047967579515743, 0.9059711835032602, 0.9071340752240257,
    0.9082854988355995, 0.9094255204581565, 0.9105542065947524, 0.9116716241159021,
    0.9127778402443036, 0.9138729225397084, 0.9149569388839406, 0.9160299574660665,
    0.9170920467677159, 0.9181432755485565, 0.9191837128319222, 0.9202134278905995,
    0.9212324902327671, 0.9222409695880982, 0.9232389358940184, 0.9242264592821258,
    0.9252036100647725, 0.9261704587218068, 0.9271270758874804, 0.9280735323375172,
    0.9290098989763479, 0.9299362468245096, 0.93085264700621, 0.9317591707370589,
    0.9326558893119654, 0.9335428740932019, 0.9344201964986366, 0.9352879279901316,
    0.9361461400621106, 0.936994904230293, 0.9378342920205968, 0.9386643749582091,
    0.9394852245568253, 0.9402969123080547, 0.9410995096709964, 0.9418930880619802,
    0.942677718844477, 0.9434534733191756, 0.9442204227142265, 0.9449786381756519,
    0.9457281907579235, 0.9464691514147037, 0.9472015909897542, 0.9479255802080082,
    0.9486411896668074, 0.949348489827302, 0.950047551006015, 0.950738443366567,
    0.9514212369115642, 0.9520960014746472, 0.9527628067126984, 0.9534217220982106,
    0.954072816911813, 0.9547161602349552, 0.9553518209427473, 0.9559798676969568,
    0.9566003689391593, 0.9572133928840438, 0.9578190075128697, 0.9584172805670771,
    0.9590082795420459, 0.9595920716810064, 0.9601687239690969, 0.9607383031275691,
    0.9613008756081401, 0.9618565075874883, 0.9624052649618942, 0.9629472133420228,
    0.9634824180478483, 0.9640109441037175, 0.9645328562335532, 0.9650482188561946,
    0.965557096080873, 0.9660595517028242, 0.9665556491990324, 0.9670454517241073,
    0.967529022106292, 0.9680064228436, 0.9684777161000798, 0.9689429637022071,
    0.9694022271354014, 0.9698555675406659, 0.970303045711352, 0.9707447220900414,
    0.9711806567655505, 0.9716109094700517, 0.9720355395763104, 0.972454606095039,
    0.9728681676723632, 0.9732762825874005, 0.9736790087499504, 0.9740764036982924,
    0.9744685245970932, 0.974855428235419, 0.9752371710248535, 0.9756138089977185,
    0.9759853978053968, 0.9763519927167552, 0.9767136486166669, 0.9770704200046301,
    0.9774223609934839, 0.977769525308218, 0.9781119662848753, 0.978449736869546,
    0.978782889617452, 0.9791114766921196, 0.9794355498646397, 0.9797551605130128,
    0.9800703596215797, 0.9803811977805332, 0.9806877251855123, 0.9809899916372761,
    0.9812880465414556, 0.9815819389083841, 0.9818717173530003, 0.9821574300948293,
    0.9824391249580331, 0.9827168493715354, 0.9829906503692136, 0.9832605745901621,
    0.9835266682790216, 0.9837889772863738, 0.9840475470692024, 0.984302422691416,
    0.9845536488244333, 0.9848012697478296, 0.9850453293500411, 0.9852858711291294,
    0.9855229381936004, 0.9857565732632807, 0.985986818670247, 0.9862137163598085,
    0.9864373078915416, 0.9866576344403748, 0.9868747367977225, 0.9870886553726675,
    0.9872994301931899, 0.9875071009074414, 0.9877117067850649, 0.9879132867185572,
    0.9881118792246727, 0.9883075224458702, 0.9885002541517979, 0.9886901117408179,
    0.9888771322415687, 0.9890613523145635, 0.9892428082538249, 0.9894215359885534,
    0.9895975710848298, 0.9897709487473502, 0.989941703821191, 0.9901098707936066,
    0.9902754837958544, 0.9904385766050489, 0.9905991826460436, 0.9907573349933392,
    0.9909130663730166, 0.9910664091646956, 0.9912173954035162, 0.9913660567821436,
    0.9915124246527948, 0.9916565300292851, 0.9917984035890967, 0.991938075675465,
    0.9920755762994837, 0.9922109351422284, 0.992344181556895, 0.9924753445709563,
    0.9926044528883325, 0.9927315348915765, 0.992856618644072, 0.9929797318922465,
    0.9931009020677942, 0.993220156289912, 0.9933375213675448, 0.9934530238016426,
    0.9935666897874246, 0.9936785452166547, 0.9937886156799222, 0.9938969264689322,
    0.9940035025788011, 0.9941083687103587, 0.9942115492724561, 0.9943130683842779,
    0.9944129498776589, 0.9945112172994044, 0.9946078939136136, 0.9947030027040059,
    0.9947965663762482, 0.9948886073602853, 0.9949791478126689, 0.9950682096188899,
    0.9951558143957079, 0.9952419834934817, 0.9953267379984989, 0.9954100987353024,
    0.9954920862690168, 0.9955727209076711, 0.9956520227045191, 0.9957300114603563,
    0.9958067067258333, 0.9958821278037642, 0.9959562937514322, 0.9960292233828886,
    0.9961009352712472, 0.9961714477509732, 0.9962407789201657, 0.9963089466428343,
    0.9963759685511682, 0.9964418620477992, 0.9965066443080568, 0.9965703322822155,
    0.9966329426977345, 0.996694492061489, 0.9967549966619925, 0.9968144725716112,
    0.996872935648768, 0.9969304015401386, 0.9969868856828366, 0.9970424033065893,
    0.9970969694359039, 0.9971505988922221, 0.9972033062960658, 0.9972551060691698,
    0.997306012436606, 0.9973560394288943, 0.9974052008841033, 0.9974535104499395,
    0.9975009815858233, 0.9975476275649552, 0.9975934614763678, 0.9976384962269678,
    0.9976827445435629, 0.9977262189748787, 0.9977689318935611, 0.9978108954981671,
    0.9978521218151418, 0.9978926227007827, 0.9979324098431905, 0.9979714947642073,
    0.9980098888213408, 0.9980476032096748, 0.9980846489637667, 0.9981210369595312,
    0.99815677791611, 0.9981918823977272, 0.9982263608155321, 0.998260223429427,
    0.9982934803498811, 0.9983261415397302, 0.9983582168159629, 0.9983897158514919,
    0.9984206481769113, 0.9984510231822397, 0.9984808501186487, 0.9985101381001776,
    0.9985388961054329, 0.9985671329792744, 0.9985948574344858, 0.9986220780534321,
    0.998648803289701, 0.9986750414697315, 0.9987008007944272, 0.9987260893407547,
    0.9987509150633285, 0.998775285795981, 0.9987992092533179, 0.9988226930322598,
    0.9988457446135685, 0.9988683713633594, 0.9988905805346001, 0.9989123792685936,
    0.9989337745964477, 0.9989547734405302, 0.99897538261591, 0.9989956088317833,
    0.9990154586928864, 0.999034938700894, 0.9990540552558034, 0.9990728146573047,
    0.9990912231061373, 0.9991092867054318, 0.9991270114620384, 0.9991444032878424,
    0.9991614680010633, 0.9991782113275434, 0.9991946389020203, 0.999210756269387,
    0.9992265688859384, 0.9992420821206033, 0.9992573012561646, 0.9992722314904651,
    0.9992868779375995, 0.9993012456290955, 0.9993153395150786, 0.9993291644654264,
    0.9993427252709092, 0.9993560266443164, 0.9993690732215726, 0.9993818695628381,
    0.9993944201535995, 0.999406729405745, 0.9994188016586301, 0.9994306411801276,
    0.9994422521676687, 0.9994536387492691, 0.9994648049845439, 0.9994757548657114,
    0.999486492318583, 0.9994970212035429, 0.9995073453165145, 0.999517468389917,
    0.9995273940936078, 0.9995371260358157, 0.9995466677640614, 0.9995560227660667,
    0.9995651944706528, 0.9995741862486272, 0.9995830014136592, 0.9995916432231452,
    0.9996001148790622, 0.9996084195288109, 0.9996165602660482, 0.9996245401315087,
    0.9996323621138159, 0.9996400291502827, 0.9996475441277023, 0.9996549098831274,
    0.9996621292046407, 0.9996692048321146, 0.9996761394579609, 0.9996829357278705,
    0.9996895962415441, 0.9996961235534122, 0.9997025201733459, 0.9997087885673585,
    0.9997149311582968, 0.9997209503265241, 0.9997268484105936, 0.9997326277079119,
    0.9997382904753946, 0.9997438389301124, 0.999749275249928, 0.9997546015741248,
    0.9997598200040267, 0.9997649326036093, 0.9997699414001022, 0.999774848384584,
    0.9997796555125671, 0.9997843647045764, 0.9997889778467186, 0.9997934967912432,
    0.9997979233570964, 0.9998022593304666, 0.9998065064653225, 0.9998106664839428,
    0.9998147410774386, 0.9998187319062691, 0.9998226406007482, 0.9998264687615454,
    0.9998302179601778, 0.9998338897394967, 0.9998374856141656, 0.9998410070711318,
    0.9998444555700908, 0.9998478325439446, 0.999851139399252, 0.999854377516673,
    0.9998575482514067, 0.999860652933622, 0.9998636928688823, 0.9998666693385639,
    0.9998695836002677, 0.9998724368882249, 0.9998752304136969, 0.9998779653653681,
    0.9998806429097341, 0.999883264191483, 0.9998858303338706, 0.9998883424390912,
    0.9998908015886412, 0.999893208843678, 0.9998955652453733, 0.9998978718152596,
    0.999900129555574, 0.9999023394495935, 0.9999045024619678, 0.9999066195390448,
    0.9999086916091922, 0.9999107195831134, 0.9999127043541591, 0.9999146467986333,
    0.9999165477760945, 0.9999184081296526, 0.9999202286862606, 0.9999220102570016,
    0.9999237536373716, 0.9999254596075577, 0.9999271289327111, 0.9999287623632166,
    0.9999303606349573, 0.9999319244695754, 0.9999334545747276, 0.9999349516443381,
    0.9999364163588458, 0.9999378493854486, 0.9999392513783434, 0.9999406229789615,
    0.9999419648162011, 0.9999432775066552, 0.9999445616548364, 0.999945817853397,
    0.9999470466833468, 0.9999482487142658, 0.9999494245045144, 0.9999505746014399,
    0.9999516995415787, 0.9999527998508566, 0.9999538760447841, 0.9999549286286499,
    0.9999559580977097, 0.999956964937373, 0.9999579496233862, 0.9999589126220126,
    0.9999598543902088, 0.9999607753757995, 0.9999616760176477, 0.9999625567458232,
    0.9999634179817675, 0.9999642601384557, 0.9999650836205568, 0.9999658888245895,
    0.9999666761390769, 0.9999674459446972, 0.999968198614433, 0.9999689345137165,
    0.999969654000574, 0.9999703574257663, 0.9999710451329272, 0.9999717174587,
    0.9999723747328705, 0.9999730172784994, 0.99997364541205, 0.9999742594435163,
    0.9999748596765461, 0.9999754464085644, 0.9999760199308927, 0.9999765805288675,
    0.9999771284819556, 0.9999776640638685, 0.9999781875426732, 0.9999786991809027,
    0.9999791992356635, 0.999979687958741, 0.9999801655967042, 0.9999806323910067,
    0.9999810885780873, 0.9999815343894685, 0.9999819700518526, 0.9999823957872169,
    0.9999828118129063, 0.9999832183417247, 0.9999836155820249, 0.9999840037377966,
    0.9999843830087524, 0.9999847535904128, 0.9999851156741896, 0.9999854694474671,
    0.9999858150936831, 0.9999861527924065, 0.9999864827194155, 0.9999868050467724,
    0.9999871199428991, 0.9999874275726491, 0.9999877280973798, 0.9999880216750219,
    0.9999883084601493, 0.9999885886040464, 0.999988862254774, 0.9999891295572352,
    0.9999893906532387, 0.9999896456815617, 0.9999898947780114, 0.9999901380754853,
    0.9999903757040304, 0.9999906077909011, 0.9999908344606161, 0.9999910558350148,
    0.9999912720333113, 0.9999914831721486, 0.9999916893656512, 0.9999918907254768,
    0.9999920873608669, 0.9999922793786964, 0.9999924668835228, 0.9999926499776336,
    0.9999928287610931, 0.9999930033317888, 0.999993173785476, 0.9999933402158224,
    0.9999935027144511, 0.9999936613709833, 0.9999938162730799, 0.9999939675064822,
    0.9999941151550521, 0.9999942593008113, 0.9999944000239799, 0.9999945374030138,
    0.999994671514642, 0.9999948024339027, 0.9999949302341787, 0.9999950549872326,
    0.9999951767632405, 0.9999952956308255, 0.999995411657091, 0.9999955249076523,
    0.9999956354466681, 0.9999957433368717, 0.9999958486396009, 0.9999959514148277,
    0.9999960517211877, 0.999996149616008, 0.9999962451553356, 0.9999963383939642,
    0.9999964293854615, 0.9999965181821951, 0.9999966048353582, 0.999996689394995,
    0.9999967719100249, 0.9999968524282672, 0.9999969309964647, 0.9999970076603063,
    0.9999970824644506, 0.9999971554525474, 0.9999972266672599, 0.9999972961502859,
    0.9999973639423787, 0.9999974300833677, 0.9999974946121786, 0.9999975575668524,
    0.9999976189845653, 0.9999976789016473, 0.9999977373536006, 0.9999977943751179,
    0.9999978500000999, 0.9999979042616725, 0.9999979571922039, 0.9999980088233213,
    0.9999980591859273,
];
