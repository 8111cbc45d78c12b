// Frozen two-sample Welch t-test reference values.
// Computed with an independent statistics package; do not regenerate from
// the library under test.
#pragma once
#include <vector>

struct WelchReferenceCase {
  std::vector<double> treated;
  std::vector<double> control;
  double tau;
  double se;
  double t;
  double df;
  double p;
};

inline const std::vector<WelchReferenceCase>& welch_reference_cases() {
  static const std::vector<WelchReferenceCase> cases = {
    {{1.0, 0.0, 1.0, 1.0},
     {0.0, 0.0, 1.0, 0.0},
     0.5, 0.3535533905932738, 1.414213562373095, 6.0, 0.20703125},
    {{4.008567836363015, 0.4455673129552953, 4.230509864876246, 1.739785575302535},
     {-1.962327604478659, 0.25774494062640896, 0.4256917161576931, 2.0001780403826217, 1.7676769561534766},
     2.108314837605964, 1.1552378647866959, 1.8250049638004595, 6.0395348293191775, 0.11747869428241531},
    {{6.0, 7.0, 10.0, 10.0, 8.0, 6.0, 11.0, 3.0, 10.0, 6.0, 6.0, 3.0, 4.0},
     {3.0, 9.0, 11.0, 9.0, 3.0, 11.0, 3.0, 10.0, 5.0, 11.0, 0.0},
     0.104895104895105, 1.4407653687650948, 0.07280512647594552, 16.97674645730152, 0.9428120939869117},
    {{1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0},
     {0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0},
     0.0892857142857143, 0.22279722943110597, 0.4007487638589487, 11.783965937703746, 0.6957758377461505},
    {{5.0608401217465016, 2.516131895502225, 3.2328694850669533, -4.443772145359354, 0.32696086458148893, -0.4935345180316031, 4.315447250217453, 2.115606175447166, -2.482317350736457, 2.1215072505822192, 1.0285806957222423, -0.638389135293945, 0.09594374907359104, -2.096600816985, 3.4379001919338035},
     {-1.6331609975304548, -0.46382485804260454, -2.287159249263696, -3.196453657458025, 0.15446466145865712, 0.3597713100507087, 1.6054950358246236, -3.7725769211873468, -2.1972695036305794, -3.3549037321116706, -0.0871891311237245, -3.7366178703014796, -0.020086009061173193, -2.7912636464005107, 0.5976327910646413, -0.2850847414378479, -1.4788645439252839, -2.5119454178339957},
     2.334202496503917, 0.7958279328669181, 2.9330492184348254, 22.516022596205495, 0.007579455430407542},
    {{1.0, 8.0, 4.0, 6.0, 3.0},
     {5.0, 11.0, 0.0, 8.0, 11.0, 2.0, 9.0, 0.0, 6.0, 8.0, 1.0, 9.0, 5.0, 6.0, 1.0, 2.0, 8.0, 1.0, 2.0, 2.0},
     -0.4499999999999993, 1.470186167946445, -0.306083685053682, 8.360569484444364, 0.7670247989768518},
    {{0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0},
     {0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0},
     -0.027472527472527486, 0.19335143236026311, -0.14208597855814767, 24.77518811614582, 0.8881612389760956},
    {{0.8373979118633994, 4.1310364158862365, 1.1030779134395325, 1.6066364096581884, -0.5284672797950546, 4.569176851284928, 5.218726216736857, 5.895188231333976},
     {0.9499360755904953, 0.4855079487633851, 1.8025384124242123, -0.2986157224919934, -0.36021351161250315, -1.596159495313306, 0.13261807633605804, 0.9368365247980424, -1.1728969413995005, -1.7607266457811064, 0.5651098771570658, -0.3740132201147872, -0.2728026854053027, 1.5106493010278113, 1.73098675816052, -1.1499454876425572, 1.8963640453547017, 0.6016288637360602},
     2.652607574157269, 0.8836940952874016, 3.001726036535944, 8.522065604938433, 0.0158489717028332},
    {{10.0, 1.0, 7.0, 3.0, 9.0, 7.0, 7.0, 9.0, 7.0, 4.0, 0.0, 5.0},
     {8.0, 4.0, 11.0, 0.0, 5.0, 7.0, 6.0, 10.0, 4.0, 1.0, 10.0, 5.0, 4.0},
     -0.019230769230769162, 1.3130674187799463, -0.014645683043935157, 22.979399360242223, 0.9884412690401223},
    {{1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0},
     {1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0},
     0.0, 0.1284832148879242, 0.0, 28.0, 1.0},
    {{0.14038913143516757, -1.2114930176946719, -0.7731487897021903, 0.7358712349786083, 0.08608399163111097, 0.30004400568243494, 0.4825430840050312, -0.7538051616354564, -0.199355653249689, -0.8858585910881018, -0.2291703271741875, -0.2962735226959037, -0.17765996499762443, 0.5534906664672586, 1.9265955342688654, -0.16539748906594193, -1.762377708585766, 0.8356801246506829},
     {-2.081135760708184, -1.6018532904126508, 0.19254481026712922, -2.094739648416808, -0.8369727265373779, -2.5773745282523395, -2.3565697955812235, 0.4958984817461731, -2.903238588945056, -2.448037575700306},
     1.543712170433488, 0.42442321232258334, 3.6372001474325297, 14.26893075069245, 0.0026174668598752562},
    {{5.0, 2.0, 8.0},
     {0.0, 1.0, 3.0, 11.0, 7.0, 10.0, 3.0, 9.0, 10.0, 9.0, 9.0, 1.0, 0.0},
     -0.615384615384615, 2.1047518324339625, -0.2923787051288494, 4.201933449676186, 0.7838698135421236},
    {{0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0},
     {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0},
     -0.02777777777777779, 0.18993584584382656, -0.14624821162308602, 23.289840975004786, 0.8849839562477451},
    {{-0.05400202451074765, 1.3641616357516373, 0.7846499767587582, -1.6046766627057574, 4.815519071905024, -1.249854940202925, -1.4436405406607469, 2.603790490027845},
     {1.6191227644596085, 1.4130247650589154, 0.9829636304410854, 1.084934687085465, 0.19191885568544764, 1.0640380413279589, -3.2469586229492875},
     0.2078442156369299, 1.0182159003123454, 0.20412587897436302, 12.755579228764695, 0.8414758669900648},
    {{0.0, 11.0, 3.0},
     {6.0, 9.0, 3.0, 10.0, 2.0, 7.0, 4.0, 0.0, 7.0},
     -0.6666666666666661, 3.4641016151377544, -0.1924500897298751, 2.4713827899462353, 0.8620821233008567},
    {{1.0, 0.0, 1.0, 0.0},
     {0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0},
     0.08333333333333331, 0.32469877260207336, 0.2566481316375669, 4.711486185554344, 0.8082774515034861},
    {{-1.3120074601999887, -1.4351088006255304, 0.9914836789035157, -1.4049824565743698, -0.423788274088164, -2.1201690717582315, -2.3316561112289205, -3.3728833297472365, -0.7839772407626093, -1.6661880285239754, -2.548539705901844, -2.054966840539176, -2.6031406460459348, -5.149764881169284, 0.06834646538517974, -0.9312989285569722, -1.1326241187995527, -1.2857039000839054, -2.9099780623798672},
     {0.5692339105962751, -0.7893848089967712, -1.4133100868681594, -1.6779791876606074, -0.6871190807598601, -1.27111715006047},
     -0.8273494263591131, 0.4502712772581804, -1.837446597520189, 14.630013608193224, 0.08653864611356613},
    {{9.0, 4.0, 11.0, 8.0, 2.0},
     {10.0, 0.0, 10.0, 9.0, 10.0, 0.0, 2.0, 0.0, 11.0, 2.0, 6.0, 0.0, 10.0},
     1.4153846153846148, 2.113019657032541, 0.6698397767734622, 9.381898532375585, 0.5191047162934692},
    {{1.0, 1.0, 1.0, 1.0, 1.0},
     {0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0},
     0.33333333333333337, 0.12598815766974242, 2.6457513110645907, 14.000000000000002, 0.019187621399825546},
    {{1.6341117085443668, 0.6088232963455728, 1.8178892678070935, -0.44288893323679623, 1.2464959163989147, 2.746177721281809, 1.82363645045217, 0.8713863729583952, 2.023690707318456, 1.4729811756191191, -0.22941844937643885, 3.047921496681454, 0.6247341349713643, 0.2889397315759701, 0.3139006274820888, 0.2324507459732562, 1.3629540359522263, 0.8232650690596532},
     {2.8484251902763917, 2.153535100663826, 1.052756468970198, 1.090512152361067, 1.2600606796033058, 1.1275492991450766, 2.1416229269361726, 2.9145330421797766, 0.10210866675057906, 1.9761518517553245},
     -0.5407782558748009, 0.3610800839692109, -1.4976684671451246, 19.98378356804891, 0.149849094269723},
    {{3.0, 9.0, 8.0, 3.0, 0.0, 4.0, 8.0, 11.0, 5.0},
     {7.0, 11.0, 6.0, 11.0, 4.0, 6.0},
     -1.833333333333333, 1.6649991658322902, -1.101101652754821, 12.319037041068238, 0.2919020952493893},
    {{1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0},
     {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0},
     -0.3333333333333333, 0.22109200320607228, -1.5076679775823676, 16.26771014776256, 0.15081327622096988},
    {{0.7161396884803193, 3.45747602573897, 1.239658382081103, -0.4592335287230189, -0.5609036148668687, -1.722627225306466, -0.9927349283053113, -0.33815147642528265, 0.25701641628375604, 2.3030748652160344, 3.2049165833098225, 1.7158894838765537, 0.9775307381527855, -0.8757545568585487, 1.3725262380550116, 1.0275040350908222, 0.5826784510939021, -0.9413551948739838, 0.3119178573723085, -0.1851182072425024},
     {1.4307234473163568, -2.9557844790308394, -2.7238450352488197, -1.1033457358510668, -4.412897408773655, -0.20267030861072421, 0.21457091728806255, -1.0357085365517609, -1.7479268342191256, -1.3776388424894872, -2.12294453999203, -0.5265723397457103, -2.136057837641014, -4.728288554850757, 2.610484620573523, -1.0063411048171909, -4.084459205801583, -4.978262545627164},
     2.2704649640559693, 0.5797231882534654, 3.9164639435869546, 29.34910608291537, 0.0004939319105515298},
    {{1.0, 4.0, 5.0, 8.0, 4.0, 6.0, 3.0, 6.0, 8.0, 3.0},
     {5.0, 5.0, 5.0, 6.0, 6.0, 8.0, 11.0, 10.0, 9.0, 11.0, 9.0, 0.0, 0.0, 8.0, 9.0},
     -2.0, 1.1397577019031804, -1.7547589252175064, 22.999843019550344, 0.09261514701860979},
    {{1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0},
     {1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0},
     0.13749999999999996, 0.1993478952317614, 0.6897489428726737, 20.13349651666353, 0.49822596166689714},
    {{-0.30899085016474265, -3.358018255614469, -0.6593104525782154, -1.7439001300292105},
     {-1.4999342488518659, 0.18562882206036235, -1.0224294837650405, -1.9738430723776859, -1.1683123779702078, 0.2473621264924044},
     -0.6456335496946543, 0.7784538134841301, -0.829379390930065, 4.754307815884152, 0.44651659687692624},
    {{5.0, 8.0, 1.0, 9.0, 9.0, 3.0, 0.0, 2.0},
     {5.0, 0.0, 3.0, 10.0, 7.0, 5.0, 11.0, 1.0, 6.0, 2.0, 3.0, 4.0},
     -0.125, 1.6179082682594104, -0.07726025167945917, 14.215936432345458, 0.9394933951105225},
    {{1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0},
     {0.0, 0.0, 1.0, 1.0, 0.0},
     0.35, 0.27757062983221864, 1.2609403243115536, 6.407508781533688, 0.25129846303689757},
    {{-0.7642707380194476, 0.41357556831994746, -0.1749225872102075, 1.040940185054461, 0.08379934976953723, -1.058347518030884, 2.5955757054252433, -0.16293493763556355, -0.11537725412149535, -0.7378615446902459, 3.0623707490683865, -2.7406591999540075, -2.1617406492816444, 1.443035165049666},
     {1.4127516054516882, 0.2525650180855373, 0.4752816533405773, 0.2435804072102531, 2.1729012757991857, 1.1261710893293588, 0.47112945948391416, 0.09838134253427566, 1.3540859666826894, 0.7475836245637167, 0.45599917178045346},
     -0.7492923595355967, 0.47303837913385155, -1.5839990846146037, 17.803934708535156, 0.13079517080176767},
    {{9.0, 11.0, 8.0, 2.0, 0.0, 5.0, 11.0, 8.0, 1.0, 4.0, 1.0, 5.0, 3.0, 11.0, 8.0},
     {3.0, 4.0, 4.0, 10.0, 0.0, 0.0, 3.0, 7.0, 4.0, 6.0},
     1.7000000000000002, 1.39015815019, 1.2228824466969117, 22.317786434050543, 0.23413094391605996},
    {{1.0, 0.0, 0.0},
     {1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0},
     -0.39999999999999997, 0.3536656119548027, -1.131011855489978, 2.528756067932924, 0.3538321213011808},
    {{-1.1425812616434996, 1.0776077644244082, 3.2087822940664474, 3.2515516094954564},
     {-2.38066941761924, 0.11755882590054245, 3.982485070824262, 3.0630084869278504},
     0.4032443600773492, 1.7869028607946276, 0.22566663746793056, 5.456287106997007, 0.8296729046897263},
    {{10.0, 0.0, 9.0, 4.0, 1.0, 6.0},
     {0.0, 11.0, 1.0, 8.0, 5.0, 10.0, 0.0, 9.0, 10.0, 4.0, 11.0, 6.0, 9.0, 1.0, 5.0, 7.0, 5.0, 9.0},
     -1.166666666666667, 1.8953848316715842, -0.6155302327906447, 8.0413691670207, 0.555221179316157},
    {{0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0},
     {1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0},
     0.1217948717948718, 0.20689615454995108, 0.5886763437426131, 22.868169310412508, 0.5618485434807226},
    {{-2.5888393216108727, -1.133186638624314, -1.2155834997369133, -0.9235662121440861, -2.4263596492783694, -0.36456983621405126, -0.5904091819898064, 0.2610444512782111, -1.292458263791202, -0.7819369064530012, -0.24885594878472073, -0.9342737273631304, 0.387775232196107, -0.824244047750418, -1.9299603579805542, 0.09694324211178196, -0.5820793852683548, -0.7169683894703232, -0.8515448149332465, -0.7793194877172199},
     {1.1600498625820628, 1.5327632499139816, -0.9138854590366421, -1.7993801999458343, 0.7283707615345498, 0.6611050595293501, -0.11214468770350594, 1.2757026526205786, 2.223482164053941, 2.1242876425846213, 3.603978912333179, 3.597705711135309},
     -2.0454226096430235, 0.5018055514665988, -4.076125909059758, 14.063055138617552, 0.0011239891037355442},
    {{9.0, 11.0, 3.0, 8.0, 4.0, 10.0, 0.0, 3.0, 10.0, 4.0, 7.0, 11.0, 0.0, 10.0, 11.0, 3.0, 4.0, 6.0, 4.0},
     {3.0, 3.0, 10.0, 7.0, 4.0, 8.0, 0.0, 8.0, 11.0, 8.0, 4.0, 1.0, 5.0, 9.0, 10.0, 2.0, 3.0, 2.0},
     0.7660818713450288, 1.1815087646527567, 0.6483928805811093, 34.980540038579306, 0.5209648086855424},
    {{1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0},
     {0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0},
     0.3714285714285714, 0.24206219099312068, 1.5344344769610354, 10.976672141592097, 0.15322734581553096},
    {{-1.6981238892991883, -0.8261185245492819, -0.6563093415343627, -1.561750443988225, -2.0414443080174953, -0.3042236690052684, -1.4208082906174373, -1.987820661452483, -1.3383986547860627, -1.9503962208731922, -1.1644440749526674, -1.3103842619996446},
     {1.954349794937837, -2.107786923539071, -3.600592117600448, -3.442654967934767, 1.9705771933228946, -3.215135762594438, -3.6142649403399134, -3.839360920008535, 0.29310952091797216, 3.2684788575407695},
     -0.12169050189317265, 0.900069240632171, -0.13520126719106892, 9.574621989634654, 0.895252672098473},
    {{0.0, 8.0, 11.0, 2.0, 3.0, 2.0, 6.0, 11.0, 7.0, 9.0, 10.0},
     {2.0, 7.0, 8.0, 7.0, 1.0, 6.0, 9.0, 11.0, 0.0, 4.0, 1.0, 9.0, 1.0, 8.0},
     0.9870129870129869, 1.5464725196119447, 0.6382350636664772, 20.857077541604458, 0.530266687322833},
    {{1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0},
     {0.0, 1.0, 1.0, 0.0, 0.0},
     -0.04285714285714287, 0.2786770721068624, -0.15378783239372035, 6.527341273079988, 0.8824227552258515},
    {{-0.3050024389934235, -0.6476548890768041, 1.543238588986103, -4.068191852998222, 0.09622584385798438, -4.95254323663165},
     {1.1538615050301297, -2.3600571107935546, -0.6356499164478313, 0.2759328564989358, 0.5943048277252517, -0.28985701036458145, 1.0553993550465253, -0.5541521397449429, 3.4304278571886853, -1.4273470291606687, 2.144957444560588, 3.3472077214026315, -0.09482494302610489, 2.4088225219200274, 1.6391265755471003, -3.1135410434725235, -2.3654735316539637, -1.338010358832644, 2.2909299149170037},
     -1.7133068130728473, 1.1305172877558944, -1.5155069556466534, 6.935130688396637, 0.17381715161351893},
    {{5.0, 8.0, 0.0, 8.0, 10.0, 1.0, 10.0, 10.0, 2.0, 0.0},
     {10.0, 10.0, 8.0, 11.0, 10.0},
     -4.4, 1.4452988925785866, -3.044352986495321, 11.068551417738854, 0.011086227886258257},
    {{1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0},
     {0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0},
     0.3095238095238096, 0.2131635247781176, 1.4520486553503638, 17.1422618755747, 0.16454560775870652},
    {{0.06048954590832911, -2.523611200909137, -1.6745614496460917, 0.20137116070291128, -1.0388032884925895, -2.16643078042896, -2.031125011855308, -0.6017455814865164},
     {1.5460096531245084, 2.421729649333284, 1.0157378127903633, 1.3070793123713287, 0.9508852654224463, -0.8425306186505799, 0.06835656315774186, 0.11109304242482332, -0.311987081341755, 0.03227159871729912, -1.2996220735881294, -0.1152187560991993, 0.5652952571959111, 0.4856490479505621, 1.3449053797997141, -0.5304684940269624},
     -1.643626173187255, 0.44025046011534225, -3.7333888822209014, 13.319634818943555, 0.0024092400640158503},
    {{0.0, 11.0, 8.0, 8.0, 3.0, 4.0, 5.0, 1.0, 1.0, 6.0, 10.0, 10.0, 3.0, 5.0, 7.0, 6.0, 8.0, 6.0},
     {3.0, 0.0, 5.0, 8.0, 3.0, 3.0, 3.0, 3.0, 9.0, 8.0, 4.0, 3.0, 0.0, 5.0, 0.0, 5.0},
     1.791666666666667, 1.0274520328164045, 1.7437959237429628, 31.949801263202406, 0.09081091351783555},
    {{0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0},
     {1.0, 0.0, 1.0, 0.0, 0.0, 0.0},
     0.019607843137254943, 0.2423175619839151, 0.08091796144167422, 8.454694297501481, 0.9373900979587704},
    {{-0.2666957746530152, -0.9259604648125936, -0.768075635373376, 0.7089498858310115},
     {-4.272695488468623, -4.390396182182607, 0.2180080627637837, 0.3981905352134101, -4.500453139077318, -1.2289252237558064, -0.2683660179709666},
     1.693431281816311, 0.9398302801468043, 1.80184796935016, 7.859070670608086, 0.10991434811253874},
    {{7.0, 8.0, 0.0, 8.0, 9.0, 7.0, 3.0, 1.0, 6.0, 8.0, 4.0, 2.0},
     {0.0, 3.0, 2.0, 0.0, 4.0, 8.0},
     2.4166666666666665, 1.5163669367500356, 1.5937215512270433, 10.457629561292444, 0.14074710548860736},
    {{1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0},
     {0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0},
     0.30303030303030304, 0.2081886549977899, 1.455556274348955, 20.723321922905193, 0.16049799929809602},
    {{-0.2910726073594614, 1.23407574813291, -1.468668404663059, 1.9747048279601613, 1.2400272562169445, -2.6577470532838503, 1.9152680287501722, -1.3616633708297101, -1.9317102224379505, -2.266400138644072, 3.245327234277082, -1.8483850217601319, 4.21057118810704, -0.4403391575160285, -1.139329090816248, 1.5294290872570753, 2.617484298690695, 1.3260757015352158},
     {-4.093049516269913, -0.31178750920882475, -0.6788469179836892, -3.2609048222418644, 0.6215545235559755, -0.7887029791384205, -2.903932159380083, -0.7159741554956985, -0.6498866402153091, -1.2681906711390896, 2.8319879812148145, 1.643922278631719, 0.8589388572297414, 1.7598466151401333, -1.0746546897810012, -2.982864137103427, 1.319121627773219, -1.7102001498602946, 0.2485284145826231, -0.8332470497976295},
     0.9265086273975056, 0.6350284763200225, 1.4590032761469298, 34.0911239917982, 0.1537174092096282},
    {{3.0, 6.0, 0.0, 11.0, 7.0},
     {5.0, 11.0, 3.0, 7.0, 7.0, 6.0, 7.0, 1.0, 7.0, 3.0, 6.0, 1.0, 6.0, 9.0, 3.0, 2.0, 8.0, 10.0},
     -0.2666666666666666, 1.9875100197059064, -0.13417123135113831, 5.189181341146692, 0.8983165259343018},
  };
  return cases;
}
