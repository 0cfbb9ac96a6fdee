//! Frozen conical-product Gauss-Jacobi quadrature rules on the reference
//! tetrahedron `{x,y,z >= 0, x+y+z <= 1}`.
//!
//! Each rule is a Stroud conical product: n Gauss-Jacobi points per direction
//! with weights (1-t)^2, (1-t), 1 on [0,1] composed through the Duffy-type map
//! `x = t1, y = t2(1-t1), z = t3(1-t1)(1-t2)`. The n^3-point rule integrates
//! polynomials of total degree <= 2n-1 exactly; weights are positive and sum
//! to the reference volume 1/6. Entries are `[x, y, z, w]`.

/// A quadrature rule on the reference tetrahedron: points and weights.
#[derive(Clone, Copy, Debug)]
pub struct TetRule {
    /// Polynomial degree integrated exactly.
    pub degree: usize,
    /// Quadrature data, each entry `[x, y, z, w]`.
    pub data: &'static [[f64; 4]],
}

/// Degree-3 rule (8 points).
pub const TET_DEG_3: TetRule = TetRule { degree: 3, data: &DATA_3 };

static DATA_3: [[f64; 4]; 8] = [
    [0.1225148226554415, 0.13605497680284598, 0.15668263733681828, 0.03697985635885293],
    [0.1225148226554415, 0.13605497680284598, 0.5847475632048942, 0.03697985635885293],
    [0.1225148226554415, 0.5659331650728008, 0.06583868706004439, 0.02115700645452407],
    [0.1225148226554415, 0.5659331650728008, 0.2457133252117132, 0.02115700645452407],
    [0.5441518440112253, 0.0706797241593969, 0.08139566701467026, 0.016027040598476597],
    [0.5441518440112253, 0.0706797241593969, 0.30377276481470755, 0.016027040598476597],
    [0.5441518440112253, 0.29399880063162287, 0.03420279323676641, 0.009169429921479734],
    [0.5441518440112253, 0.29399880063162287, 0.12764656212038542, 0.009169429921479734],
];

/// Degree-5 rule (27 points).
pub const TET_DEG_5: TetRule = TetRule { degree: 5, data: &DATA_5 };

static DATA_5: [[f64; 4]; 27] = [
    [0.0729940240731497, 0.08212156786344241, 0.09521987984171491, 0.008770474929651053],
    [0.0729940240731497, 0.08212156786344241, 0.42244220403170396, 0.01403275988744167],
    [0.0729940240731497, 0.08212156786344241, 0.7496645282216929, 0.008770474929651053],
    [0.0729940240731497, 0.3795782302805906, 0.061696018609146475, 0.01000614257217611],
    [0.0729940240731497, 0.3795782302805906, 0.2737138728231298, 0.016009828115481756],
    [0.0729940240731497, 0.3795782302805906, 0.48573172703711315, 0.01000614257217611],
    [0.0729940240731497, 0.7301650280476316, 0.022184302640819727, 0.0030478770905181885],
    [0.0729940240731497, 0.7301650280476316, 0.09842047393960936, 0.004876603344829096],
    [0.0729940240731497, 0.7301650280476316, 0.17465664523839897, 0.0030478770905181885],
    [0.3470037660383518, 0.05784760393614263, 0.06707424175205852, 0.008162650766546693],
    [0.3470037660383518, 0.05784760393614263, 0.2975743150127528, 0.013060241226474693],
    [0.3470037660383518, 0.05784760393614263, 0.528074388273447, 0.008162650766546693],
    [0.3470037660383518, 0.26738032041188453, 0.04345955565380246, 0.009312682379470461],
    [0.3470037660383518, 0.26738032041188453, 0.19280795677488183, 0.014900291807152721],
    [0.3470037660383518, 0.26738032041188453, 0.3421563578959612, 0.009312682379470461],
    [0.3470037660383518, 0.514338662174092, 0.01562693925790165, 0.0028366486956309255],
    [0.3470037660383518, 0.514338662174092, 0.06932878589377812, 0.004538637913009475],
    [0.3470037660383518, 0.514338662174092, 0.1230306325296546, 0.0028366486956309255],
    [0.7050022098884984, 0.026133252286734836, 0.0303014811742758, 0.0016716811314837058],
    [0.7050022098884984, 0.026133252286734836, 0.13443226891238338, 0.0026746898103739264],
    [0.7050022098884984, 0.026133252286734836, 0.238563056650491, 0.0016716811314837058],
    [0.7050022098884984, 0.12079182013390256, 0.019633302935484487, 0.0019072034149817869],
    [0.7050022098884984, 0.12079182013390256, 0.08710298498879954, 0.0030515254639708555],
    [0.7050022098884984, 0.12079182013390256, 0.1545726670421146, 0.0019072034149817869],
    [0.7050022098884984, 0.2323578005798647, 0.007059631139554789, 0.000580935315837386],
    [0.7050022098884984, 0.2323578005798647, 0.03131999476581847, 0.0009294965053398166],
    [0.7050022098884984, 0.2323578005798647, 0.055580358392082155, 0.000580935315837386],
];

/// Degree-7 rule (64 points).
pub const TET_DEG_7: TetRule = TetRule { degree: 7, data: &DATA_7 };

static DATA_7: [[f64; 4]; 64] = [
    [0.048500549446997276, 0.05433461122723453, 0.06229180934845269, 0.0026134590075074064],
    [0.048500549446997276, 0.05433461122723453, 0.2960729004920768, 0.00489961445988876],
    [0.048500549446997276, 0.05433461122723453, 0.6010919388336914, 0.00489961445988876],
    [0.048500549446997276, 0.05433461122723453, 0.8348730299773154, 0.0026134590075074064],
    [0.048500549446997276, 0.2634159753661123, 0.04777490464781691, 0.0039241267807630644],
    [0.048500549446997276, 0.2634159753661123, 0.22707406860967846, 0.00735680500908295],
    [0.048500549446997276, 0.2634159753661123, 0.461009406577212, 0.00735680500908295],
    [0.048500549446997276, 0.2634159753661123, 0.6403085705390735, 0.0039241267807630644],
    [0.048500549446997276, 0.5552859757470137, 0.027509832253848288, 0.0025043094430090133],
    [0.048500549446997276, 0.5552859757470137, 0.13075420207953337, 0.004694984969634407],
    [0.048500549446997276, 0.5552859757470137, 0.2654592727264557, 0.004694984969634407],
    [0.048500549446997276, 0.5552859757470137, 0.3687036425521408, 0.0025043094430090133],
    [0.048500549446997276, 0.8185180164205335, 0.009233146216573625, 0.0006013729287201745],
    [0.048500549446997276, 0.8185180164205335, 0.0438851336893508, 0.0011274313042136626],
    [0.048500549446997276, 0.8185180164205335, 0.08909630044311856, 0.0011274313042136626],
    [0.048500549446997276, 0.8185180164205335, 0.12374828791589573, 0.0006013729287201745],
    [0.23860073755186234, 0.0434790928042876, 0.04984652136888425, 0.003381089578564937],
    [0.23860073755186234, 0.0434790928042876, 0.2369204605788584, 0.0063387393265891935],
    [0.23860073755186234, 0.0434790928042876, 0.4809997090649916, 0.0063387393265891935],
    [0.23860073755186234, 0.0434790928042876, 0.6680736482749657, 0.003381089578564937],
    [0.23860073755186234, 0.21078806639798717, 0.03822995078056706, 0.0050767293939918325],
    [0.23860073755186234, 0.21078806639798717, 0.1817069135037572, 0.009517660952894894],
    [0.23860073755186234, 0.21078806639798717, 0.3689042825463933, 0.009517660952894894],
    [0.23860073755186234, 0.21078806639798717, 0.5123812452695834, 0.0050767293939918325],
    [0.23860073755186234, 0.444345324777483, 0.02201363960428823, 0.0032398803788146044],
    [0.23860073755186234, 0.444345324777483, 0.10463080453434874, 0.006074005640321842],
    [0.23860073755186234, 0.444345324777483, 0.21242313313630587, 0.006074005640321842],
    [0.23860073755186234, 0.444345324777483, 0.29504029806636634, 0.0032398803788146044],
    [0.23860073755186234, 0.6549862048169314, 0.007388454838611975, 0.0007780094259316958],
    [0.23860073755186234, 0.6549862048169314, 0.03511731762334665, 0.0014585827526946153],
    [0.23860073755186234, 0.6549862048169314, 0.07129574000785961, 0.0014585827526946153],
    [0.23860073755186234, 0.6549862048169314, 0.09902460279259427, 0.0007780094259316958],
    [0.5170472951043674, 0.027578625974397006, 0.031617462101731886, 0.0016175887234345168],
    [0.5170472951043674, 0.027578625974397006, 0.1502777621740506, 0.003032594380369403],
    [0.5170472951043674, 0.027578625974397006, 0.3050963167471849, 0.003032594380369403],
    [0.5170472951043674, 0.027578625974397006, 0.4237566168195036, 0.0016175887234345168],
    [0.5170472951043674, 0.13370208226799038, 0.02424911481807402, 0.0024288206593849693],
    [0.5170472951043674, 0.13370208226799038, 0.1152560157370178, 0.004553461442867273],
    [0.5170472951043674, 0.13370208226799038, 0.23399460689062437, 0.004553461442867273],
    [0.5170472951043674, 0.13370208226799038, 0.32500150780956816, 0.0024288206593849693],
    [0.5170472951043674, 0.2818465778637801, 0.013963169280339022, 0.001550031090353911],
    [0.5170472951043674, 0.2818465778637801, 0.0663669280461273, 0.002905939875758178],
    [0.5170472951043674, 0.2818465778637801, 0.13473919898572514, 0.002905939875758178],
    [0.5170472951043674, 0.2818465778637801, 0.18714295775151343, 0.001550031090353911],
    [0.5170472951043674, 0.4154553003749571, 0.004686469274784633, 0.00037221707525626345],
    [0.5170472951043674, 0.4154553003749571, 0.022274783246233516, 0.0006978185458062604],
    [0.5170472951043674, 0.4154553003749571, 0.04522262127444195, 0.0006978185458062604],
    [0.5170472951043674, 0.4154553003749571, 0.06281093524589083, 0.00037221707525626345],
    [0.7958514178967728, 0.011657740668923408, 0.013364994112965895, 0.00024398542162060643],
    [0.7958514178967728, 0.011657740668923408, 0.06352380214147103, 0.00045741467393993214],
    [0.7958514178967728, 0.011657740668923408, 0.1289670392928327, 0.00045741467393993214],
    [0.7958514178967728, 0.011657740668923408, 0.17912584732133785, 0.00024398542162060643],
    [0.7958514178967728, 0.056517108699407355, 0.010250325460829475, 0.00036634579855543273],
    [0.7958514178967728, 0.056517108699407355, 0.048719785505009605, 0.000686811297504771],
    [0.7958514178967728, 0.056517108699407355, 0.0989116878988102, 0.000686811297504771],
    [0.7958514178967728, 0.056517108699407355, 0.13738114794299033, 0.00036634579855543273],
    [0.7958514178967728, 0.11913915929712367, 0.005902361000058099, 0.00023379551527910795],
    [0.7958514178967728, 0.11913915929712367, 0.02805391526296908, 0.0004383110215343274],
    [0.7958514178967728, 0.11913915929712367, 0.05695550754313443, 0.0004383110215343274],
    [0.7958514178967728, 0.11913915929712367, 0.0791070618060454, 0.00023379551527910795],
    [0.7958514178967728, 0.175616803962505, 0.0019810139747004326, 5.614254026695112e-05],
    [0.7958514178967728, 0.175616803962505, 0.009415757216553928, 0.00010525391877839167],
    [0.7958514178967728, 0.175616803962505, 0.01911602092416824, 0.00010525391877839167],
    [0.7958514178967728, 0.175616803962505, 0.026550764166021736, 5.614254026695112e-05],
];

/// Degree-9 rule (125 points).
pub const TET_DEG_9: TetRule = TetRule { degree: 9, data: &DATA_9 };

static DATA_9: [[f64; 4]; 125] = [
    [0.03457893991821509, 0.038433274396333254, 0.043485068432992914, 0.000937439821766994],
    [0.03457893991821509, 0.038433274396333254, 0.21391665612550587, 0.001893772314860301],
    [0.03457893991821509, 0.038433274396333254, 0.4634938928427259, 0.0022509015744614524],
    [0.03457893991821509, 0.038433274396333254, 0.7130711295599459, 0.001893772314860301],
    [0.03457893991821509, 0.038433274396333254, 0.8835027172524588, 0.000937439821766994],
    [0.03457893991821509, 0.19116632379395632, 0.036320349320621594, 0.0016192765852693287],
    [0.03457893991821509, 0.19116632379395632, 0.17867116129643199, 0.0032711872229882577],
    [0.03457893991821509, 0.19116632379395632, 0.38712736814391435, 0.0038880706053228027],
    [0.03457893991821509, 0.19116632379395632, 0.5955835749913967, 0.0032711872229882577],
    [0.03457893991821509, 0.19116632379395632, 0.737934386967207, 0.0016192765852693287],
    [0.03457893991821509, 0.42283010559815015, 0.025452983470970993, 0.0014179245325509268],
    [0.03457893991821509, 0.42283010559815015, 0.12521118877662393, 0.0028644251737084915],
    [0.03457893991821509, 0.42283010559815015, 0.2712954772418174, 0.0034046010087031412],
    [0.03457893991821509, 0.42283010559815015, 0.41737976570701085, 0.0028644251737084915],
    [0.03457893991821509, 0.42283010559815015, 0.5171379710126638, 0.0014179245325509268],
    [0.03457893991821509, 0.6714158560300757, 0.013791806769482952, 0.0007158915019438699],
    [0.03457893991821509, 0.6714158560300757, 0.0678462123292524, 0.0014462107063785861],
    [0.03457893991821509, 0.6714158560300757, 0.14700260202585463, 0.0017189384016476673],
    [0.03457893991821509, 0.6714158560300757, 0.22615899172245688, 0.0014462107063785861],
    [0.03457893991821509, 0.6714158560300757, 0.28021339728222633, 0.0007158915019438699],
    [0.03457893991821509, 0.8702932130946324, 0.0044624546299289304, 0.00015253647049861928],
    [0.03457893991821509, 0.8702932130946324, 0.021952210424070785, 0.00030814708115588284],
    [0.03457893991821509, 0.8702932130946324, 0.04756392349357632, 0.00036625773050792725],
    [0.03457893991821509, 0.8702932130946324, 0.07317563656308185, 0.00030814708115588284],
    [0.03457893991821509, 0.8702932130946324, 0.09066539235722369, 0.00015253647049861928],
    [0.17348032077169567, 0.032903630280304574, 0.037228589988925066, 0.0014468812384700466],
    [0.17348032077169567, 0.032903630280304574, 0.18313908129108614, 0.0029229221638361527],
    [0.17348032077169567, 0.032903630280304574, 0.3968080244739999, 0.0034741294130136253],
    [0.17348032077169567, 0.032903630280304574, 0.6104769676569135, 0.0029229221638361527],
    [0.17348032077169567, 0.032903630280304574, 0.7563874589590747, 0.0014468812384700466],
    [0.17348032077169567, 0.16366198662379483, 0.031094705420448402, 0.002499254732643922],
    [0.17348032077169567, 0.16366198662379483, 0.15296458408475713, 0.0050488781365648685],
    [0.17348032077169567, 0.16366198662379483, 0.3314288463022547, 0.006001000045085251],
    [0.17348032077169567, 0.16366198662379483, 0.5098931085197522, 0.0050488781365648685],
    [0.17348032077169567, 0.16366198662379483, 0.6317629871840611, 0.002499254732643922],
    [0.17348032077169567, 0.36199479967574705, 0.02179089788247224, 0.0021884801094189874],
    [0.17348032077169567, 0.36199479967574705, 0.10719624406648309, 0.004421065701079483],
    [0.17348032077169567, 0.36199479967574705, 0.2322624397762786, 0.005254794184744126],
    [0.17348032077169567, 0.36199479967574705, 0.3573286354860741, 0.004421065701079483],
    [0.17348032077169567, 0.36199479967574705, 0.442733981670085, 0.0021884801094189874],
    [0.17348032077169567, 0.5748149081269931, 0.01180749020134917, 0.001104934907704598],
    [0.17348032077169567, 0.5748149081269931, 0.058084738328039634, 0.0022321380949974104],
    [0.17348032077169567, 0.5748149081269931, 0.12585238555065562, 0.0026530766729556347],
    [0.17348032077169567, 0.5748149081269931, 0.19362003277327156, 0.0022321380949974104],
    [0.17348032077169567, 0.5748149081269931, 0.239897280899962, 0.001104934907704598],
    [0.17348032077169567, 0.7450784917211248, 0.0038204123794308657, 0.00023543074683011366],
    [0.17348032077169567, 0.7450784917211248, 0.018793803728000477, 0.0004756062416607825],
    [0.17348032077169567, 0.7450784917211248, 0.040720593753589725, 0.0005652964877443152],
    [0.17348032077169567, 0.7450784917211248, 0.06264738377917896, 0.0004756062416607825],
    [0.17348032077169567, 0.7450784917211248, 0.07762077512774858, 0.00023543074683011366],
    [0.3898863870655193, 0.02428853571607679, 0.02748109949881237, 0.0010226870157805372],
    [0.3898863870655193, 0.02428853571607679, 0.1351881260230007, 0.0020659847302002795],
    [0.3898863870655193, 0.02428853571607679, 0.2929125386092019, 0.0024555899595375442],
    [0.3898863870655193, 0.02428853571607679, 0.45063695119540315, 0.0020659847302002795],
    [0.3898863870655193, 0.02428853571607679, 0.5583439777195914, 0.0010226870157805372],
    [0.3898863870655193, 0.12081068178837216, 0.0229532381913956, 0.0017665274082243967],
    [0.3898863870655193, 0.12081068178837216, 0.11291415968958744, 0.0035686564848839996],
    [0.3898863870655193, 0.12081068178837216, 0.24465146557305426, 0.004241636883961956],
    [0.3898863870655193, 0.12081068178837216, 0.376388771456521, 0.0035686564848839996],
    [0.3898863870655193, 0.12081068178837216, 0.46634969295471285, 0.0017665274082243967],
    [0.3898863870655193, 0.2672143938543264, 0.016085428780805947, 0.0015468651695030612],
    [0.3898863870655193, 0.2672143938543264, 0.07912925657314306, 0.0031249050496968385],
    [0.3898863870655193, 0.2672143938543264, 0.17144960954007712, 0.0037142024102955738],
    [0.3898863870655193, 0.2672143938543264, 0.2637699625070112, 0.0031249050496968385],
    [0.3898863870655193, 0.2672143938543264, 0.3268137902993483, 0.0015468651695030612],
    [0.3898863870655193, 0.42431222048264017, 0.008715957632321214, 0.0007809919386245135],
    [0.3898863870655193, 0.42431222048264017, 0.04287652242081132, 0.001577723579854279],
    [0.3898863870655193, 0.42431222048264017, 0.09290069622592022, 0.001875252089225376],
    [0.3898863870655193, 0.42431222048264017, 0.1429248700310291, 0.001577723579854279],
    [0.3898863870655193, 0.42431222048264017, 0.17708543481951922, 0.0007809919386245135],
    [0.3898863870655193, 0.5499960157369496, 0.002820121115434852, 0.00016640755405279004],
    [0.3898863870655193, 0.5499960157369496, 0.013873058054682572, 0.0003361687988193041],
    [0.3898863870655193, 0.5499960157369496, 0.03005879859876551, 0.00039956380849458424],
    [0.3898863870655193, 0.5499960157369496, 0.04624453914284844, 0.0003361687988193041],
    [0.3898863870655193, 0.5499960157369496, 0.05729747608209616, 0.00016640755405279004],
    [0.6343334726308868, 0.014557132183071371, 0.01647056877436848, 0.00036752003800732535],
    [0.6343334726308868, 0.014557132183071371, 0.08102388069429513, 0.000742446882427908],
    [0.6343334726308868, 0.014557132183071371, 0.17555469759302092, 0.0008824581727683845],
    [0.6343334726308868, 0.014557132183071371, 0.2700855144917467, 0.000742446882427908],
    [0.6343334726308868, 0.014557132183071371, 0.3346388264116733, 0.00036752003800732535],
    [0.6343334726308868, 0.0724068788863314, 0.01375683270031392, 0.0006348317815652548],
    [0.6343334726308868, 0.0724068788863314, 0.06767416394121158, 0.0012824576304595495],
    [0.6343334726308868, 0.0724068788863314, 0.1466298242413909, 0.0015243046257091615],
    [0.6343334726308868, 0.0724068788863314, 0.22558548454157024, 0.0012824576304595495],
    [0.6343334726308868, 0.0724068788863314, 0.2795028157824679, 0.0006348317815652548],
    [0.6343334726308868, 0.16015272793830798, 0.009640668162164329, 0.0005558924060985346],
    [0.6343334726308868, 0.16015272793830798, 0.0474254628170509, 0.0011229879766854489],
    [0.6343334726308868, 0.16015272793830798, 0.10275689971540261, 0.0013347620434555898],
    [0.6343334726308868, 0.16015272793830798, 0.1580883366137543, 0.0011229879766854489],
    [0.6343334726308868, 0.16015272793830798, 0.19587313126864087, 0.0005558924060985346],
    [0.6343334726308868, 0.2543080057465078, 0.005223836827337729, 0.00028066278591366313],
    [0.6343334726308868, 0.2543080057465078, 0.025697687655046136, 0.0005669819026601679],
    [0.6343334726308868, 0.2543080057465078, 0.05567926081130269, 0.0006739038517854062],
    [0.6343334726308868, 0.2543080057465078, 0.08566083396755925, 0.0005669819026601679],
    [0.6343334726308868, 0.2543080057465078, 0.10613468479526765, 0.00028066278591366313],
    [0.6343334726308868, 0.32963554472103873, 0.0016902161715118362, 5.9801395389292425e-05],
    [0.6343334726308868, 0.32963554472103873, 0.008314702139567988, 0.00012080799678937197],
    [0.6343334726308868, 0.32963554472103873, 0.01801549132403724, 0.00014359007576937298],
    [0.6343334726308868, 0.32963554472103873, 0.02771628050850649, 0.00012080799678937197],
    [0.6343334726308868, 0.32963554472103873, 0.03434076647656264, 5.9801395389292425e-05],
    [0.8510542129470164, 0.005929510490997776, 0.006708904550162075, 4.716533650593649e-05],
    [0.8510542129470164, 0.005929510490997776, 0.033003200393884866, 9.528121850813961e-05],
    [0.8510542129470164, 0.005929510490997776, 0.0715081382809929, 0.00011324943504224687],
    [0.8510542129470164, 0.005929510490997776, 0.11001307616810091, 9.528121850813961e-05],
    [0.8510542129470164, 0.005929510490997776, 0.1363073720118237, 4.716533650593649e-05],
    [0.8510542129470164, 0.029493264372235897, 0.005603527040461492, 8.147053631288428e-05],
    [0.8510542129470164, 0.029493264372235897, 0.027565502601231005, 0.00016458298715681176],
    [0.8510542129470164, 0.029493264372235897, 0.059726261340373836, 0.00019562019257218075],
    [0.8510542129470164, 0.029493264372235897, 0.09188702007951666, 0.00016458298715681176],
    [0.8510542129470164, 0.029493264372235897, 0.11384899564028617, 8.147053631288428e-05],
    [0.8510542129470164, 0.06523450282167806, 0.003926902791626686, 7.133992621705566e-05],
    [0.8510542129470164, 0.06523450282167806, 0.01931766338160684, 0.00014411759995364997],
    [0.8510542129470164, 0.06523450282167806, 0.04185564211565275, 0.00017129542453323186],
    [0.8510542129470164, 0.06523450282167806, 0.06439362084969866, 0.00014411759995364997],
    [0.8510542129470164, 0.06523450282167806, 0.07978438143967881, 7.133992621705566e-05],
    [0.8510542129470164, 0.10358647356188863, 0.002127808889925482, 3.601859320129827e-05],
    [0.8510542129470164, 0.10358647356188863, 0.010467357624338817, 7.276308627071356e-05],
    [0.8510542129470164, 0.10358647356188863, 0.02267965674554746, 8.648481349327652e-05],
    [0.8510542129470164, 0.10358647356188863, 0.0348919558667561, 7.276308627071356e-05],
    [0.8510542129470164, 0.10358647356188863, 0.04323150460116944, 3.601859320129827e-05],
    [0.8510542129470164, 0.1342694011463441, 0.0006884703934122678, 7.674555521798016e-06],
    [0.8510542129470164, 0.1342694011463441, 0.003386801256323271, 1.550378001720073e-05],
    [0.8510542129470164, 0.1342694011463441, 0.007338192953319732, 1.842749657758907e-05],
    [0.8510542129470164, 0.1342694011463441, 0.011289584650316192, 1.550378001720073e-05],
    [0.8510542129470164, 0.1342694011463441, 0.013987915513227195, 7.674555521798016e-06],
];

/// Degree-11 rule (216 points).
pub const TET_DEG_11: TetRule = TetRule { degree: 11, data: &DATA_11 };

static DATA_11: [[f64; 4]; 216] = [
    [0.025904555093667347, 0.028556998157274804, 0.03192633532428046, 0.0003873813194995006],
    [0.025904555093667347, 0.028556998157274804, 0.16016977524692427, 0.0008157169605546407],
    [0.025904555093667347, 0.028556998157274804, 0.35995741608771364, 0.0010579988585975816],
    [0.025904555093667347, 0.028556998157274804, 0.585581030661344, 0.0010579988585975816],
    [0.025904555093667347, 0.028556998157274804, 0.7853686715021334, 0.0008157169605546407],
    [0.025904555093667347, 0.028556998157274804, 0.9136121114247773, 0.0003873813194995006],
    [0.025904555093667347, 0.14424268942517893, 0.02802017985874759, 0.0007261290454488318],
    [0.025904555093667347, 0.14424268942517893, 0.14057316208606052, 0.0015290251442409246],
    [0.025904555093667347, 0.14424268942517893, 0.31591698319967126, 0.0019831717809005137],
    [0.025904555093667347, 0.14424268942517893, 0.5139357722814824, 0.0019831717809005137],
    [0.025904555093667347, 0.14424268942517893, 0.689279593395093, 0.0015290251442409246],
    [0.025904555093667347, 0.14424268942517893, 0.8018325756224061, 0.0007261290454488318],
    [0.025904555093667347, 0.3282552518060437, 0.0218069509935963, 0.0007542546786186481],
    [0.025904555093667347, 0.3282552518060437, 0.10940229763259654, 0.001588249879270996],
    [0.025904555093667347, 0.3282552518060437, 0.24586516594144162, 0.002059987275848608],
    [0.025904555093667347, 0.3282552518060437, 0.3999750271588473, 0.002059987275848608],
    [0.025904555093667347, 0.3282552518060437, 0.5364378954676924, 0.001588249879270996],
    [0.025904555093667347, 0.3282552518060437, 0.6240332421066926, 0.0007542546786186481],
    [0.025904555093667347, 0.5441993816342697, 0.014515544997457445, 0.0005285480847880932],
    [0.025904555093667347, 0.5441993816342697, 0.07282237551583988, 0.001112974775829054],
    [0.025904555093667347, 0.5441993816342697, 0.16365730727685635, 0.001443547332489432],
    [0.025904555093667347, 0.5441993816342697, 0.2662387559952065, 0.001443547332489432],
    [0.025904555093667347, 0.5441993816342697, 0.357073687756223, 0.001112974775829054],
    [0.025904555093667347, 0.5441993816342697, 0.4153805182746054, 0.0005285480847880932],
    [0.025904555093667347, 0.7493072010711824, 0.007590029653804002, 0.0002354768656004556],
    [0.025904555093667347, 0.7493072010711824, 0.038078073522040734, 0.0004958485694062614],
    [0.025904555093667347, 0.7493072010711824, 0.08557472802506771, 0.0006431240808237768],
    [0.025904555093667347, 0.7493072010711824, 0.13921351581008246, 0.0006431240808237768],
    [0.025904555093667347, 0.7493072010711824, 0.18671017031310944, 0.0004958485694062614],
    [0.025904555093667347, 0.7493072010711824, 0.2171982141813462, 0.0002354768656004556],
    [0.025904555093667347, 0.9029335561082023, 0.002402798460379506, 4.681288071535252e-05],
    [0.025904555093667347, 0.9029335561082023, 0.012054489983069013, 9.857486370605318e-05],
    [0.025904555093667347, 0.9029335561082023, 0.02709064840648874, 0.00012785328530683462],
    [0.025904555093667347, 0.9029335561082023, 0.044071240391641564, 0.00012785328530683462],
    [0.025904555093667347, 0.9029335561082023, 0.059107398815061295, 9.857486370605318e-05],
    [0.025904555093667347, 0.9029335561082023, 0.06875909033775081, 4.681288071535252e-05],
    [0.13156394165798502, 0.025459442447314427, 0.02846331019337601, 0.0006651185320093191],
    [0.13156394165798502, 0.025459442447314427, 0.14279628244677883, 0.0014005540278508595],
    [0.13156394165798502, 0.025459442447314427, 0.32091311096136965, 0.001816542544196858],
    [0.13156394165798502, 0.025459442447314427, 0.5220635049333309, 0.001816542544196858],
    [0.13156394165798502, 0.025459442447314427, 0.7001803334479216, 0.0014005540278508595],
    [0.13156394165798502, 0.025459442447314427, 0.8145133057013245, 0.0006651185320093191],
    [0.13156394165798502, 0.12859679542090371, 0.02498085241832228, 0.0012467350913622922],
    [0.13156394165798502, 0.12859679542090371, 0.12532529890069496, 0.0026252762024168083],
    [0.13156394165798502, 0.12859679542090371, 0.28164971008524164, 0.003405028165372227],
    [0.13156394165798502, 0.12859679542090371, 0.4581895528358696, 0.003405028165372227],
    [0.13156394165798502, 0.12859679542090371, 0.6145139640204162, 0.0026252762024168083],
    [0.13156394165798502, 0.12859679542090371, 0.714858410502789, 0.0012467350913622922],
    [0.13156394165798502, 0.2926496561493704, 0.019441567727644285, 0.001295025700392976],
    [0.13156394165798502, 0.2926496561493704, 0.09753551423161412, 0.002726962749596564],
    [0.13156394165798502, 0.2926496561493704, 0.21919635977183174, 0.00353691735740001],
    [0.13156394165798502, 0.2926496561493704, 0.35659004242081294, 0.00353691735740001],
    [0.13156394165798502, 0.2926496561493704, 0.4782508879610305, 0.002726962749596564],
    [0.13156394165798502, 0.2926496561493704, 0.5563448344650004, 0.001295025700392976],
    [0.13156394165798502, 0.4851704916699121, 0.012941054953285663, 0.0009074963312758475],
    [0.13156394165798502, 0.4851704916699121, 0.06492338823959827, 0.0019109340378602741],
    [0.13156394165798502, 0.4851704916699121, 0.14590552454954522, 0.0024785141521842984],
    [0.13156394165798502, 0.4851704916699121, 0.2373600421225577, 0.0024785141521842984],
    [0.13156394165798502, 0.4851704916699121, 0.3183421784325046, 0.0019109340378602741],
    [0.13156394165798502, 0.4851704916699121, 0.37032451171881725, 0.0009074963312758475],
    [0.13156394165798502, 0.6680304230845859, 0.006766744952680052, 0.00040430454254398464],
    [0.13156394165798502, 0.6680304230845859, 0.033947774062241205, 0.0008513525458804131],
    [0.13156394165798502, 0.6680304230845859, 0.07629250284290766, 0.001104218822657773],
    [0.13156394165798502, 0.6680304230845859, 0.12411313241452142, 0.001104218822657773],
    [0.13156394165798502, 0.6680304230845859, 0.16645786119518785, 0.0008513525458804131],
    [0.13156394165798502, 0.6680304230845859, 0.193638890304749, 0.00040430454254398464],
    [0.13156394165798502, 0.8049930450981089, 0.002142168752388419, 8.037588012955997e-05],
    [0.13156394165798502, 0.8049930450981089, 0.010746948690665928, 0.00016924917475602053],
    [0.13156394165798502, 0.8049930450981089, 0.024152146530489874, 0.00021951907630889293],
    [0.13156394165798502, 0.8049930450981089, 0.039290866713416236, 0.00021951907630889293],
    [0.13156394165798502, 0.8049930450981089, 0.05269606455324018, 0.00016924917475602053],
    [0.13156394165798502, 0.8049930450981089, 0.061300844491517695, 8.037588012955997e-05],
    [0.30243691802289124, 0.020450057282137002, 0.022862885748512272, 0.0005858361910284335],
    [0.30243691802289124, 0.020450057282137002, 0.11469976853404644, 0.0012336075413911063],
    [0.30243691802289124, 0.020450057282137002, 0.257770432927963, 0.0016000100940180633],
    [0.30243691802289124, 0.020450057282137002, 0.4193425917670088, 0.0016000100940180633],
    [0.30243691802289124, 0.020450057282137002, 0.5624132561609253, 0.0012336075413911063],
    [0.30243691802289124, 0.020450057282137002, 0.6542501389464594, 0.0005858361910284335],
    [0.30243691802289124, 0.1032941643596024, 0.020065634350338608, 0.0010981238711522442],
    [0.30243691802289124, 0.1032941643596024, 0.10066636560183195, 0.0023123424424443865],
    [0.30243691802289124, 0.1032941643596024, 0.2262324760905373, 0.0029991477229178313],
    [0.30243691802289124, 0.1032941643596024, 0.36803644152696907, 0.0029991477229178313],
    [0.30243691802289124, 0.1032941643596024, 0.49360255201567443, 0.0023123424424443865],
    [0.30243691802289124, 0.1032941643596024, 0.5742032832671677, 0.0010981238711522442],
    [0.30243691802289124, 0.23506807913162345, 0.0156162561103851, 0.001140658224196827],
    [0.30243691802289124, 0.23506807913162345, 0.07834448288515437, 0.002401907920794021],
    [0.30243691802289124, 0.23506807913162345, 0.1760674108494749, 0.003115315681224384],
    [0.30243691802289124, 0.23506807913162345, 0.2864275919960105, 0.003115315681224384],
    [0.30243691802289124, 0.23506807913162345, 0.384150519960331, 0.002401907920794021],
    [0.30243691802289124, 0.23506807913162345, 0.4468787467351002, 0.001140658224196827],
    [0.30243691802289124, 0.38970862644711474, 0.010394780468332311, 0.0007993224793794663],
    [0.30243691802289124, 0.38970862644711474, 0.05214909993405039, 0.0016831500915553525],
    [0.30243691802289124, 0.38970862644711474, 0.11719723795967056, 0.0021830744753709133],
    [0.30243691802289124, 0.38970862644711474, 0.1906572175703235, 0.0021830744753709133],
    [0.30243691802289124, 0.38970862644711474, 0.25570535559594365, 0.0016831500915553525],
    [0.30243691802289124, 0.38970862644711474, 0.2974596750616617, 0.0007993224793794663],
    [0.30243691802289124, 0.5365891435588389, 0.005435324131008825, 0.00035611131222568703],
    [0.30243691802289124, 0.5365891435588389, 0.027268229679833708, 0.0007498710510955254],
    [0.30243691802289124, 0.5365891435588389, 0.06128123412614783, 0.0009725955870955456],
    [0.30243691802289124, 0.5365891435588389, 0.09969270429212206, 0.0009725955870955456],
    [0.30243691802289124, 0.5365891435588389, 0.13370570873843618, 0.0007498710510955254],
    [0.30243691802289124, 0.5365891435588389, 0.15553861428726107, 0.00035611131222568703],
    [0.30243691802289124, 0.6466030793111387, 0.0017206768681208148, 7.079504960327826e-05],
    [0.30243691802289124, 0.6466030793111387, 0.00863238528444241, 0.0001490746191874015],
    [0.30243691802289124, 0.6466030793111387, 0.019399984153509398, 0.00019335233245475105],
    [0.30243691802289124, 0.6466030793111387, 0.031560018512460736, 0.00019335233245475105],
    [0.30243691802289124, 0.6466030793111387, 0.042327617381527724, 0.0001490746191874015],
    [0.30243691802289124, 0.6466030793111387, 0.049239325797849315, 7.079504960327826e-05],
    [0.509036413164752, 0.014393298231562296, 0.016091511552875463, 0.00031770121340091287],
    [0.509036413164752, 0.014393298231562296, 0.08072877023399604, 0.0006689901012644157],
    [0.509036413164752, 0.014393298231562296, 0.18142573711281995, 0.0008676916109106956],
    [0.509036413164752, 0.014393298231562296, 0.2951445514908657, 0.0008676916109106956],
    [0.509036413164752, 0.014393298231562296, 0.3958415183696896, 0.0006689901012644157],
    [0.509036413164752, 0.014393298231562296, 0.4604787770508102, 0.00031770121340091287],
    [0.509036413164752, 0.07270120042677981, 0.014122731072356395, 0.0005955167872389827],
    [0.509036413164752, 0.07270120042677981, 0.07085168525470464, 0.0012539921756512936],
    [0.509036413164752, 0.07270120042677981, 0.15922847809723192, 0.0016264493135306048],
    [0.509036413164752, 0.07270120042677981, 0.25903390831123624, 0.0016264493135306048],
    [0.509036413164752, 0.07270120042677981, 0.3474107011537635, 0.0012539921756512936],
    [0.509036413164752, 0.07270120042677981, 0.40413965533611174, 0.0005955167872389827],
    [0.509036413164752, 0.16544721224900064, 0.010991139455319007, 0.0006185833300378569],
    [0.509036413164752, 0.16544721224900064, 0.055140946130676, 0.0013025638780935055],
    [0.509036413164752, 0.16544721224900064, 0.12392096111286197, 0.0016894476428886951],
    [0.509036413164752, 0.16544721224900064, 0.2015954134733854, 0.0016894476428886951],
    [0.509036413164752, 0.16544721224900064, 0.27037542845557133, 0.0013025638780935055],
    [0.509036413164752, 0.16544721224900064, 0.31452523513092834, 0.0006185833300378569],
    [0.509036413164752, 0.27428737271877585, 0.007316124999953604, 0.0004334756464118097],
    [0.509036413164752, 0.27428737271877585, 0.03670393375934332, 0.000912778750463096],
    [0.509036413164752, 0.27428737271877585, 0.08248655613020552, 0.0011838896612931145],
    [0.509036413164752, 0.27428737271877585, 0.13418965798626661, 0.0011838896612931145],
    [0.509036413164752, 0.27428737271877585, 0.1799722803571288, 0.000912778750463096],
    [0.509036413164752, 0.27428737271877585, 0.20936008911651852, 0.0004334756464118097],
    [0.509036413164752, 0.37766581601740584, 0.003825526751514412, 0.00019312053050406545],
    [0.509036413164752, 0.37766581601740584, 0.019192110643690648, 0.0004066579471798178],
    [0.509036413164752, 0.37766581601740584, 0.04313137448012404, 0.0005274423173245557],
    [0.509036413164752, 0.37766581601740584, 0.07016639633771812, 0.0005274423173245557],
    [0.509036413164752, 0.37766581601740584, 0.0941056601741515, 0.0004066579471798178],
    [0.509036413164752, 0.37766581601740584, 0.10947224406632775, 0.00019312053050406545],
    [0.509036413164752, 0.4550965715925469, 0.0012110584817112769, 3.839242693807507e-05],
    [0.509036413164752, 0.4550965715925469, 0.006075704049849269, 8.084373776904097e-05],
    [0.509036413164752, 0.4550965715925469, 0.01365422862912706, 0.00010485571150347335],
    [0.509036413164752, 0.4550965715925469, 0.02221278661357401, 0.00010485571150347335],
    [0.509036413164752, 0.4550965715925469, 0.029791311192851798, 8.084373776904097e-05],
    [0.509036413164752, 0.4550965715925469, 0.034655956760989794, 3.839242693807507e-05],
    [0.7156811273117138, 0.008335213521318309, 0.009318655287768523, 9.73756921862055e-05],
    [0.7156811273117138, 0.008335213521318309, 0.04675033660723119, 0.00020504603516932938],
    [0.7156811273117138, 0.008335213521318309, 0.10506433152214176, 0.0002659482169177951],
    [0.7156811273117138, 0.008335213521318309, 0.17091932764482606, 0.0002659482169177951],
    [0.7156811273117138, 0.008335213521318309, 0.22923332255973664, 0.00020504603516932938],
    [0.7156811273117138, 0.008335213521318309, 0.26666500387919934, 9.73756921862055e-05],
    [0.7156811273117138, 0.04210154052700348, 0.00817852705463395, 0.00018252640191437994],
    [0.7156811273117138, 0.04210154052700348, 0.04103047928571278, 0.00038434966864932864],
    [0.7156811273117138, 0.04210154052700348, 0.092209814752857, 0.0004985080982708212],
    [0.7156811273117138, 0.04210154052700348, 0.15000751740842563, 0.0004985080982708212],
    [0.7156811273117138, 0.04210154052700348, 0.20118685287556987, 0.00038434966864932864],
    [0.7156811273117138, 0.04210154052700348, 0.2340388051066487, 0.00018252640191437994],
    [0.7156811273117138, 0.09581110725394905, 0.006365010488129524, 0.00018959631690569818],
    [0.7156811273117138, 0.09581110725394905, 0.03193233075368628, 0.00039923693676940437],
    [0.7156811273117138, 0.09581110725394905, 0.07176309793801668, 0.0005178171398138176],
    [0.7156811273117138, 0.09581110725394905, 0.11674466749632041, 0.0005178171398138176],
    [0.7156811273117138, 0.09581110725394905, 0.15657543468065083, 0.00039923693676940437],
    [0.7156811273117138, 0.09581110725394905, 0.18214275494620757, 0.00018959631690569818],
    [0.7156811273117138, 0.15884085642017984, 0.004236795697705005, 0.00013286065439714669],
    [0.7156811273117138, 0.15884085642017984, 0.02125538705823389, 0.0002797674635477119],
    [0.7156811273117138, 0.15884085642017984, 0.04776827707743831, 0.0003628631883600422],
    [0.7156811273117138, 0.15884085642017984, 0.07770973919066798, 0.0003628631883600422],
    [0.7156811273117138, 0.15884085642017984, 0.10422262920987241, 0.0002797674635477119],
    [0.7156811273117138, 0.15884085642017984, 0.1212412205704013, 0.00013286065439714669],
    [0.7156811273117138, 0.21870770448604174, 0.002215377031198134, 5.91916068934553e-05],
    [0.7156811273117138, 0.21870770448604174, 0.011114223964951752, 0.00012464100676784628],
    [0.7156811273117138, 0.21870770448604174, 0.024977542323928556, 0.00016166151897242733],
    [0.7156811273117138, 0.21870770448604174, 0.04063362587831585, 0.00016166151897242733],
    [0.7156811273117138, 0.21870770448604174, 0.054496944237292656, 0.00012464100676784628],
    [0.7156811273117138, 0.21870770448604174, 0.06339579117104628, 5.91916068934553e-05],
    [0.7156811273117138, 0.2635481483129154, 0.0007013285537106094, 1.1767311518214806e-05],
    [0.7156811273117138, 0.2635481483129154, 0.0035184632273359876, 2.4778674402626093e-05],
    [0.7156811273117138, 0.2635481483129154, 0.007907215515280685, 3.213836478000197e-05],
    [0.7156811273117138, 0.2635481483129154, 0.012863508860090075, 3.213836478000197e-05],
    [0.7156811273117138, 0.2635481483129154, 0.017252261148034773, 2.4778674402626093e-05],
    [0.7156811273117138, 0.2635481483129154, 0.02006939582166015, 1.1767311518214806e-05],
    [0.8868056161775619, 0.0033184549082272445, 0.003709987428478294, 1.1342169428582318e-05],
    [0.8868056161775619, 0.0033184549082272445, 0.018612466684717298, 2.3883443797270822e-05],
    [0.8868056161775619, 0.0033184549082272445, 0.041828712093283316, 3.09772353632451e-05],
    [0.8868056161775619, 0.0033184549082272445, 0.0680472168209275, 3.09772353632451e-05],
    [0.8868056161775619, 0.0033184549082272445, 0.09126346222949352, 2.3883443797270822e-05],
    [0.8868056161775619, 0.0033184549082272445, 0.10616594148573252, 1.1342169428582318e-05],
    [0.8868056161775619, 0.016761665846763564, 0.0032560741458038654, 2.1260391882438256e-05],
    [0.8868056161775619, 0.016761665846763564, 0.016335249843852224, 4.476845261653213e-05],
    [0.8868056161775619, 0.016761665846763564, 0.03671101065026429, 5.806544924267047e-05],
    [0.8868056161775619, 0.016761665846763564, 0.05972170732541021, 5.806544924267047e-05],
    [0.8868056161775619, 0.016761665846763564, 0.08009746813182228, 4.476845261653213e-05],
    [0.8868056161775619, 0.016761665846763564, 0.09317664382987063, 2.1260391882438256e-05],
    [0.8868056161775619, 0.038144774373970396, 0.002534068292459366, 2.2083884603022637e-05],
    [0.8868056161775619, 0.038144774373970396, 0.012713051615256798, 4.6502498491387054e-05],
    [0.8868056161775619, 0.038144774373970396, 0.028570666363006255, 6.031453642004743e-05],
    [0.8868056161775619, 0.038144774373970396, 0.04647894308546142, 6.031453642004743e-05],
    [0.8868056161775619, 0.038144774373970396, 0.062336557833210876, 4.6502498491387054e-05],
    [0.8868056161775619, 0.038144774373970396, 0.0725155411560083, 2.2083884603022637e-05],
    [0.8868056161775619, 0.06323847832649127, 0.001686773283281357, 1.54754027286723e-05],
    [0.8868056161775619, 0.06323847832649127, 0.008462295936302563, 3.2586879753265526e-05],
    [0.8868056161775619, 0.06323847832649127, 0.019017733993227436, 4.226574075494185e-05],
    [0.8868056161775619, 0.06323847832649127, 0.030938171502719367, 4.226574075494185e-05],
    [0.8868056161775619, 0.06323847832649127, 0.04149360955964424, 3.2586879753265526e-05],
    [0.8868056161775619, 0.06323847832649127, 0.04826913221266545, 1.54754027286723e-05],
    [0.8868056161775619, 0.08707295302784636, 0.0008819964556337611, 6.894546462907896e-06],
    [0.8868056161775619, 0.08707295302784636, 0.004424847782639369, 1.4517990935629583e-05],
    [0.8868056161775619, 0.08707295302784636, 0.00994417811952884, 1.8830082714698254e-05],
    [0.8868056161775619, 0.08707295302784636, 0.01617725267506287, 1.8830082714698254e-05],
    [0.8868056161775619, 0.08707295302784636, 0.021696583011952344, 1.4517990935629583e-05],
    [0.8868056161775619, 0.08707295302784636, 0.02523943433895795, 6.894546462907896e-06],
    [0.8868056161775619, 0.10492504410191429, 0.0002792162642730708, 1.3706381742917955e-06],
    [0.8868056161775619, 0.10492504410191429, 0.00140078733871757, 2.8861815200536704e-06],
    [0.8868056161775619, 0.10492504410191429, 0.0031480583034834714, 3.743426827665763e-06],
    [0.8868056161775619, 0.10492504410191429, 0.005121281417040307, 3.743426827665763e-06],
    [0.8868056161775619, 0.10492504410191429, 0.006868552381806209, 2.8861815200536704e-06],
    [0.8868056161775619, 0.10492504410191429, 0.007990123456250707, 1.3706381742917955e-06],
];

/// Degree-13 rule (343 points).
pub const TET_DEG_13: TetRule = TetRule { degree: 13, data: &DATA_13 };

static DATA_13: [[f64; 4]; 343] = [
    [0.02013277377340056, 0.022026814036977056, 0.024373249109401356, 0.00017855173271447098],
    [0.02013277377340056, 0.022026814036977056, 0.12378593786181952, 0.0003856963767890804],
    [0.02013277377340056, 0.022026814036977056, 0.2845527625545683, 0.0005265199438769559],
    [0.02013277377340056, 0.022026814036977056, 0.47892020609481123, 0.0005763397763991944],
    [0.02013277377340056, 0.022026814036977056, 0.673287649635054, 0.0005265199438769559],
    [0.02013277377340056, 0.022026814036977056, 0.8340544743278029, 0.0003856963767890804],
    [0.02013277377340056, 0.022026814036977056, 0.9334671630802212, 0.00017855173271447098],
    [0.02013277377340056, 0.1123702457270679, 0.022074366186987295, 0.00035255581689041344],
    [0.02013277377340056, 0.1123702457270679, 0.11211045802290959, 0.0007615692053125972],
    [0.02013277377340056, 0.1123702457270679, 0.25771376856463213, 0.001039629613785262],
    [0.02013277377340056, 0.1123702457270679, 0.4337484902497658, 0.0011380003855789422],
    [0.02013277377340056, 0.1123702457270679, 0.6097832119348995, 0.001039629613785262],
    [0.02013277377340056, 0.1123702457270679, 0.7553865224766221, 0.0007615692053125972],
    [0.02013277377340056, 0.1123702457270679, 0.8454226143125444, 0.00035255581689041344],
    [0.02013277377340056, 0.26043873641119514, 0.01830660888340126, 0.00040641302454754835],
    [0.02013277377340056, 0.26043873641119514, 0.09297491440430285, 0.0008779082043328543],
    [0.02013277377340056, 0.26043873641119514, 0.21372596273052968, 0.0011984457368320815],
    [0.02013277377340056, 0.26043873641119514, 0.35971424490770215, 0.001311843845660259],
    [0.02013277377340056, 0.26043873641119514, 0.5057025270848746, 0.0011984457368320815],
    [0.02013277377340056, 0.26043873641119514, 0.6264535754111015, 0.0008779082043328543],
    [0.02013277377340056, 0.26043873641119514, 0.7011218809320031, 0.00040641302454754835],
    [0.02013277377340056, 0.4437293200742529, 0.013642588658137604, 0.00034175928482494105],
    [0.02013277377340056, 0.4437293200742529, 0.06928746447921008, 0.000738247206493359],
    [0.02013277377340056, 0.4437293200742529, 0.15927446823539337, 0.0010077924012824367],
    [0.02013277377340056, 0.4437293200742529, 0.26806895307617334, 0.0011031507048623083],
    [0.02013277377340056, 0.4437293200742529, 0.3768634379169532, 0.0010077924012824367],
    [0.02013277377340056, 0.4437293200742529, 0.46685044167313655, 0.000738247206493359],
    [0.02013277377340056, 0.4437293200742529, 0.5224953174942091, 0.00034175928482494105],
    [0.02013277377340056, 0.6343418227699786, 0.008792254560259064, 0.00021178597408543818],
    [0.02013277377340056, 0.6343418227699786, 0.04465377068836185, 0.00045748692335641103],
    [0.02013277377340056, 0.6343418227699786, 0.10264779689301617, 0.0006245223022714127],
    [0.02013277377340056, 0.6343418227699786, 0.17276270172831043, 0.0006836152138835807],
    [0.02013277377340056, 0.6343418227699786, 0.2428776065636047, 0.0006245223022714127],
    [0.02013277377340056, 0.6343418227699786, 0.300871632768259, 0.00045748692335641103],
    [0.02013277377340056, 0.6343418227699786, 0.3367331488963618, 0.00021178597408543818],
    [0.02013277377340056, 0.8032552795612071, 0.004494075335505614, 8.744041677498028e-05],
    [0.02013277377340056, 0.8032552795612071, 0.02282434023179347, 0.00018888336406664113],
    [0.02013277377340056, 0.8032552795612071, 0.05246742221795969, 0.0002578475304216913],
    [0.02013277377340056, 0.8032552795612071, 0.08830597333269616, 0.0002822453161680247],
    [0.02013277377340056, 0.8032552795612071, 0.12414452444743261, 0.0002578475304216913],
    [0.02013277377340056, 0.8032552795612071, 0.15378760643359884, 0.00018888336406664113],
    [0.02013277377340056, 0.8032552795612071, 0.1721178713298867, 8.744041677498028e-05],
    [0.02013277377340056, 0.9247373870928794, 0.0014028363028614546, 1.6635291522797156e-05],
    [0.02013277377340056, 0.9247373870928794, 0.007124672079494362, 3.593452479922621e-05],
    [0.02013277377340056, 0.9247373870928794, 0.016377830612541937, 4.905476203340192e-05],
    [0.02013277377340056, 0.9247373870928794, 0.027564919566860014, 5.369637163877989e-05],
    [0.02013277377340056, 0.9247373870928794, 0.03875200852117809, 4.905476203340192e-05],
    [0.02013277377340056, 0.9247373870928794, 0.04800516705422567, 3.593452479922621e-05],
    [0.02013277377340056, 0.9247373870928794, 0.05372700283085858, 1.6635291522797156e-05],
    [0.10308902914804902, 0.020162008314901808, 0.02230979252741558, 0.000328644114455067],
    [0.10308902914804902, 0.020162008314901808, 0.113306132436956, 0.0007099166290426147],
    [0.10308902914804902, 0.020162008314901808, 0.2604623235581122, 0.0009691179025133574],
    [0.10308902914804902, 0.020162008314901808, 0.4383744812685246, 0.001060816787159599],
    [0.10308902914804902, 0.020162008314901808, 0.6162866389789369, 0.0009691179025133574],
    [0.10308902914804902, 0.020162008314901808, 0.7634428301000932, 0.0007099166290426147],
    [0.10308902914804902, 0.020162008314901808, 0.8544391700096335, 0.000328644114455067],
    [0.10308902914804902, 0.10285690090692903, 0.020205534666115764, 0.0006489177812864888],
    [0.10308902914804902, 0.10285690090692903, 0.10261910701433266, 0.0014017519363782847],
    [0.10308902914804902, 0.10285690090692903, 0.23589553786317308, 0.0019135527199284905],
    [0.10308902914804902, 0.10285690090692903, 0.39702703497251096, 0.002094614951545666],
    [0.10308902914804902, 0.10285690090692903, 0.5581585320818488, 0.0019135527199284905],
    [0.10308902914804902, 0.10285690090692903, 0.6914349629306893, 0.0014017519363782847],
    [0.10308902914804902, 0.10285690090692903, 0.7738485352789062, 0.0006489177812864888],
    [0.10308902914804902, 0.23838980799629417, 0.016756758372099386, 0.0007480478991991851],
    [0.10308902914804902, 0.23838980799629417, 0.08510359211050485, 0.0016158866676874621],
    [0.10308902914804902, 0.23838980799629417, 0.19563177091564155, 0.0022058712728006396],
    [0.10308902914804902, 0.23838980799629417, 0.3292605814278284, 0.0024145929720535498],
    [0.10308902914804902, 0.23838980799629417, 0.4628893919400152, 0.0022058712728006396],
    [0.10308902914804902, 0.23838980799629417, 0.573417570745152, 0.0016158866676874621],
    [0.10308902914804902, 0.23838980799629417, 0.6417644044835573, 0.0007480478991991851],
    [0.10308902914804902, 0.40616288065464695, 0.012487597411972558, 0.0006290455758147166],
    [0.10308902914804902, 0.40616288065464695, 0.0634215385213293, 0.0013588252308641608],
    [0.10308902914804902, 0.40616288065464695, 0.1457901786215053, 0.0018549528264934557],
    [0.10308902914804902, 0.40616288065464695, 0.24537404509865202, 0.002030470278827898],
    [0.10308902914804902, 0.40616288065464695, 0.34495791157579875, 0.0018549528264934557],
    [0.10308902914804902, 0.40616288065464695, 0.4273265516759748, 0.0013588252308641608],
    [0.10308902914804902, 0.40616288065464695, 0.4782604927853315, 0.0006290455758147166],
    [0.10308902914804902, 0.5806379934795833, 0.008047896044025664, 0.00038981539327101467],
    [0.10308902914804902, 0.5806379934795833, 0.040873350744192696, 0.0008420550308614028],
    [0.10308902914804902, 0.5806379934795833, 0.09395756149704947, 0.0011495020287237666],
    [0.10308902914804902, 0.5806379934795833, 0.1581364886861838, 0.0012582690359776733],
    [0.10308902914804902, 0.5806379934795833, 0.2223154158753181, 0.0011495020287237666],
    [0.10308902914804902, 0.5806379934795833, 0.27539962662817485, 0.0008420550308614028],
    [0.10308902914804902, 0.5806379934795833, 0.3082250813283419, 0.00038981539327101467],
    [0.10308902914804902, 0.7352511170391876, 0.004113603725448009, 0.00016094371027219033],
    [0.10308902914804902, 0.7352511170391876, 0.020892015375580077, 0.0003476606189996627],
    [0.10308902914804902, 0.7352511170391876, 0.048025492985237256, 0.0004745967569823242],
    [0.10308902914804902, 0.7352511170391876, 0.08082992690638167, 0.000519503566730793],
    [0.10308902914804902, 0.7352511170391876, 0.1136343608275261, 0.0004745967569823242],
    [0.10308902914804902, 0.7352511170391876, 0.1407678384371833, 0.0003476606189996627],
    [0.10308902914804902, 0.7352511170391876, 0.15754625008731535, 0.00016094371027219033],
    [0.10308902914804902, 0.8464484630581635, 0.001284071185022836, 3.061908483382904e-05],
    [0.10308902914804902, 0.8464484630581635, 0.006521492280570785, 6.614144764358376e-05],
    [0.10308902914804902, 0.8464484630581635, 0.014991271839667362, 9.029068821220587e-05],
    [0.10308902914804902, 0.8464484630581635, 0.025231253896893745, 9.883408152021125e-05],
    [0.10308902914804902, 0.8464484630581635, 0.035471235954120134, 9.029068821220587e-05],
    [0.10308902914804902, 0.8464484630581635, 0.04394101551321671, 6.614144764358376e-05],
    [0.10308902914804902, 0.8464484630581635, 0.049178436608764656, 3.061908483382904e-05],
    [0.24055412604805754, 0.01707187727985146, 0.01889048125654643, 0.0003323943245485752],
    [0.24055412604805754, 0.01707187727985146, 0.09594026338083723, 0.0007180176002472852],
    [0.24055412604805754, 0.01707187727985146, 0.22054255480703147, 0.0009801766605435488],
    [0.24055412604805754, 0.01707187727985146, 0.3711869983360455, 0.001072921935700492],
    [0.24055412604805754, 0.01707187727985146, 0.5218314418650595, 0.0009801766605435488],
    [0.24055412604805754, 0.01707187727985146, 0.6464337332912538, 0.0007180176002472852],
    [0.24055412604805754, 0.01707187727985146, 0.7234835154155446, 0.0003323943245485752],
    [0.24055412604805754, 0.08709253375176414, 0.017108732563053338, 0.0006563226849686153],
    [0.24055412604805754, 0.08709253375176414, 0.08689118534991355, 0.0014177475499590026],
    [0.24055412604805754, 0.08709253375176414, 0.1997409985337692, 0.0019353885733915442],
    [0.24055412604805754, 0.08709253375176414, 0.3361766701000892, 0.0021185169348394324],
    [0.24055412604805754, 0.08709253375176414, 0.47261234166640914, 0.0019353885733915442],
    [0.24055412604805754, 0.08709253375176414, 0.5854621548502649, 0.0014177475499590026],
    [0.24055412604805754, 0.08709253375176414, 0.6552446076371251, 0.0006563226849686153],
    [0.24055412604805754, 0.20185298425217452, 0.014188533109827628, 0.0007565839923729697],
    [0.24055412604805754, 0.20185298425217452, 0.07206018655945333, 0.0016343258066362151],
    [0.24055412604805754, 0.20185298425217452, 0.16564825948630266, 0.0022310428196148993],
    [0.24055412604805754, 0.20185298425217452, 0.27879644484988403, 0.0024421462752688646],
    [0.24055412604805754, 0.20185298425217452, 0.39194463021346526, 0.0022310428196148993],
    [0.24055412604805754, 0.20185298425217452, 0.48553270314031466, 0.0016343258066362151],
    [0.24055412604805754, 0.20185298425217452, 0.5434043565899404, 0.0007565839923729697],
    [0.24055412604805754, 0.34391231001735934, 0.010573685280142414, 0.0006362237146096518],
    [0.24055412604805754, 0.34391231001735934, 0.05370123380691497, 0.0013743310010026282],
    [0.24055412604805754, 0.34391231001735934, 0.12344564088858148, 0.0018761199872820555],
    [0.24055412604805754, 0.34391231001735934, 0.20776678196729162, 0.0020536402970917425],
    [0.24055412604805754, 0.34391231001735934, 0.29208792304600173, 0.0018761199872820555],
    [0.24055412604805754, 0.34391231001735934, 0.36183233012766824, 0.0013743310010026282],
    [0.24055412604805754, 0.34391231001735934, 0.40495987865444083, 0.0006362237146096518],
    [0.24055412604805754, 0.4916464874868749, 0.006814434925267874, 0.0003942636385252278],
    [0.24055412604805754, 0.4916464874868749, 0.034608894958417805, 0.0008516638543185397],
    [0.24055412604805754, 0.4916464874868749, 0.07955715196318909, 0.001162619178616367],
    [0.24055412604805754, 0.4916464874868749, 0.1338996932325338, 0.0012726273434340435],
    [0.24055412604805754, 0.4916464874868749, 0.18824223450187852, 0.001162619178616367],
    [0.24055412604805754, 0.4916464874868749, 0.23319049150664983, 0.0008516638543185397],
    [0.24055412604805754, 0.4916464874868749, 0.2609849515397998, 0.0003942636385252278],
    [0.24055412604805754, 0.6225628242941156, 0.0034831320809883422, 0.00016278026446623156],
    [0.24055412604805754, 0.6225628242941156, 0.017689999778298868, 0.00035162782944141884],
    [0.24055412604805754, 0.6225628242941156, 0.040664863824223185, 0.0004800124558191421],
    [0.24055412604805754, 0.6225628242941156, 0.06844152482891346, 0.0005254317042932069],
    [0.24055412604805754, 0.6225628242941156, 0.09621818583360371, 0.0004800124558191421],
    [0.24055412604805754, 0.6225628242941156, 0.11919304987952803, 0.00035162782944141884],
    [0.24055412604805754, 0.6225628242941156, 0.13339991757683856, 0.00016278026446623156],
    [0.24055412604805754, 0.7167175044942056, 0.001087267961947076, 3.09684840652384e-05],
    [0.24055412604805754, 0.7167175044942056, 0.005521975497506151, 6.689619818875479e-05],
    [0.24055412604805754, 0.7167175044942056, 0.012693633943526158, 9.132100957014246e-05],
    [0.24055412604805754, 0.7167175044942056, 0.021364184728868453, 9.996189289366088e-05],
    [0.24055412604805754, 0.7167175044942056, 0.03003473551421074, 9.132100957014246e-05],
    [0.24055412604805754, 0.7167175044942056, 0.03720639396023075, 6.689619818875479e-05],
    [0.24055412604805754, 0.7167175044942056, 0.041641101495789826, 3.09684840652384e-05],
    [0.4140021445970597, 0.013172872243859466, 0.014576129627594952, 0.00022880876130918545],
    [0.4140021445970597, 0.013172872243859466, 0.07402869712808724, 0.0004942584923310461],
    [0.4140021445970597, 0.013172872243859466, 0.17017337057806436, 0.0006747197259391493],
    [0.4140021445970597, 0.013172872243859466, 0.28641249157954046, 0.0007385623669191358],
    [0.4140021445970597, 0.013172872243859466, 0.4026516125810165, 0.0006747197259391493],
    [0.4140021445970597, 0.013172872243859466, 0.4987962860309937, 0.0004942584923310461],
    [0.4140021445970597, 0.013172872243859466, 0.558248853531486, 0.00022880876130918545],
    [0.4140021445970597, 0.06720167921192963, 0.013201310237477346, 0.00045178984560201725],
    [0.4140021445970597, 0.06720167921192963, 0.0670463162878291, 0.0009759283982836055],
    [0.4140021445970597, 0.06720167921192963, 0.1541226317653776, 0.0013322545826589653],
    [0.4140021445970597, 0.06720167921192963, 0.2593980880955054, 0.001458313815470411],
    [0.4140021445970597, 0.06720167921192963, 0.36467354442563316, 0.0013322545826589653],
    [0.4140021445970597, 0.06720167921192963, 0.45174985990318167, 0.0009759283982836055],
    [0.4140021445970597, 0.06720167921192963, 0.5055948659535334, 0.00045178984560201725],
    [0.4140021445970597, 0.15575226613969703, 0.010948048121463279, 0.0005208062633329322],
    [0.4140021445970597, 0.15575226613969703, 0.0556025336789802, 0.0011250133825236835],
    [0.4140021445970597, 0.15575226613969703, 0.12781625147962244, 0.0015357727442462308],
    [0.4140021445970597, 0.15575226613969703, 0.21512279463162168, 0.0016810890647395837],
    [0.4140021445970597, 0.15575226613969703, 0.30242933778362086, 0.0015357727442462308],
    [0.4140021445970597, 0.15575226613969703, 0.37464305558426314, 0.0011250133825236835],
    [0.4140021445970597, 0.15575226613969703, 0.4192975411417801, 0.0005208062633329322],
    [0.4140021445970597, 0.2653670037972931, 0.008158786702765316, 0.00043795440927899904],
    [0.4140021445970597, 0.2653670037972931, 0.04143653803738407, 0.0009460419470016253],
    [0.4140021445970597, 0.2653670037972931, 0.0952521875497448, 0.0012914561370456826],
    [0.4140021445970597, 0.2653670037972931, 0.16031542580282362, 0.0014136549809938787],
    [0.4140021445970597, 0.2653670037972931, 0.22537866405590246, 0.0012914561370456826],
    [0.4140021445970597, 0.2653670037972931, 0.27919431356826324, 0.0009460419470016253],
    [0.4140021445970597, 0.2653670037972931, 0.312472064902882, 0.00043795440927899904],
    [0.4140021445970597, 0.3793605274125544, 0.0052581025046724555, 0.00027139745807250277],
    [0.4140021445970597, 0.3793605274125544, 0.02670465258829206, 0.0005862559531456564],
    [0.4140021445970597, 0.3793605274125544, 0.061387285165953445, 0.000800306847882532],
    [0.4140021445970597, 0.3793605274125544, 0.10331866399519297, 0.0008760326652833368],
    [0.4140021445970597, 0.3793605274125544, 0.1452500428244325, 0.000800306847882532],
    [0.4140021445970597, 0.3793605274125544, 0.1799326754020939, 0.0005862559531456564],
    [0.4140021445970597, 0.3793605274125544, 0.2013792254857135, 0.00027139745807250277],
    [0.4140021445970597, 0.4803771965887789, 0.0026876279133929565, 0.00011205230633430114],
    [0.4140021445970597, 0.4803771965887789, 0.013649823229953584, 0.0002420484411266505],
    [0.4140021445970597, 0.4803771965887789, 0.03137751327457383, 0.0003304239793447725],
    [0.4140021445970597, 0.4803771965887789, 0.052810329407080706, 0.0003616890197363576],
    [0.4140021445970597, 0.4803771965887789, 0.07424314553958758, 0.0003304239793447725],
    [0.4140021445970597, 0.4803771965887789, 0.09197083558420784, 0.0002420484411266505],
    [0.4140021445970597, 0.4803771965887789, 0.10293303090076845, 0.00011205230633430114],
    [0.4140021445970597, 0.5530281155888259, 0.0008389494443281815, 2.13176337719176e-05],
    [0.4140021445970597, 0.5530281155888259, 0.004260824780425305, 4.604903006286413e-05],
    [0.4140021445970597, 0.5530281155888259, 0.009794565384190894, 6.286222579048585e-05],
    [0.4140021445970597, 0.5530281155888259, 0.016484869907057238, 6.881031113326828e-05],
    [0.4140021445970597, 0.5530281155888259, 0.02317517442992358, 6.286222579048585e-05],
    [0.4140021445970597, 0.5530281155888259, 0.02870891503368917, 4.604903006286413e-05],
    [0.4140021445970597, 0.5530281155888259, 0.0321307903697863, 2.13176337719176e-05],
    [0.600021513278993, 0.008991270970172953, 0.009949077828426144, 0.00010661038459813178],
    [0.600021513278993, 0.008991270970172953, 0.05052900105045592, 0.00023029313937459898],
    [0.600021513278993, 0.008991270970172953, 0.11615347499390488, 0.0003143766395427407],
    [0.600021513278993, 0.008991270970172953, 0.19549360787541703, 0.00034412326493283923],
    [0.600021513278993, 0.008991270970172953, 0.2748337407569292, 0.0003143766395427407],
    [0.600021513278993, 0.008991270970172953, 0.3404582147003781, 0.00023029313937459898],
    [0.600021513278993, 0.008991270970172953, 0.3810381379224079, 0.00010661038459813178],
    [0.600021513278993, 0.04586915414189636, 0.009010681596931714, 0.00021050544096987798],
    [0.600021513278993, 0.04586915414189636, 0.045763109679956226, 0.00045472079515635703],
    [0.600021513278993, 0.04586915414189636, 0.10519788844719621, 0.000620746218926338],
    [0.600021513278993, 0.04586915414189636, 0.17705466628955532, 0.0006794818338358277],
    [0.600021513278993, 0.04586915414189636, 0.24891144413191446, 0.000620746218926338],
    [0.600021513278993, 0.04586915414189636, 0.3083462228991544, 0.00045472079515635703],
    [0.600021513278993, 0.04586915414189636, 0.34509865098217896, 0.00021050544096987798],
    [0.600021513278993, 0.10631021110322474, 0.007472695812445584, 0.00024266271849622065],
    [0.600021513278993, 0.10631021110322474, 0.037952045512999216, 0.0005241849512345583],
    [0.600021513278993, 0.10631021110322474, 0.08724221492247211, 0.0007155727865602762],
    [0.600021513278993, 0.10631021110322474, 0.14683413780889112, 0.0007832809841290194],
    [0.600021513278993, 0.10631021110322474, 0.20642606069531014, 0.0007155727865602762],
    [0.600021513278993, 0.10631021110322474, 0.255716230104783, 0.0005241849512345583],
    [0.600021513278993, 0.10631021110322474, 0.28619557980533666, 0.00024266271849622065],
    [0.600021513278993, 0.18112880725740013, 0.005568858535510556, 0.00020405900430792346],
    [0.600021513278993, 0.18112880725740013, 0.028282908591455512, 0.00044079560257537996],
    [0.600021513278993, 0.18112880725740013, 0.06501529908640225, 0.0006017367284114159],
    [0.600021513278993, 0.18112880725740013, 0.10942483973180345, 0.0006586736467191908],
    [0.600021513278993, 0.18112880725740013, 0.15383438037720465, 0.0006017367284114159],
    [0.600021513278993, 0.18112880725740013, 0.19056677087215138, 0.00044079560257537996],
    [0.600021513278993, 0.18112880725740013, 0.21328082092809633, 0.00020405900430792346],
    [0.600021513278993, 0.25893618598965823, 0.0035889685660994183, 0.00012645401871201568],
    [0.600021513278993, 0.25893618598965823, 0.01822751812518269, 0.0002731581268137991],
    [0.600021513278993, 0.25893618598965823, 0.04190048342020908, 0.00037289228070240906],
    [0.600021513278993, 0.25893618598965823, 0.0705211503656744, 0.00040817571334246684],
    [0.600021513278993, 0.25893618598965823, 0.0991418173111397, 0.00037289228070240906],
    [0.600021513278993, 0.25893618598965823, 0.12281478260616609, 0.0002731581268137991],
    [0.600021513278993, 0.25893618598965823, 0.13745333216524938, 0.00012645401871201568],
    [0.600021513278993, 0.32788608759453725, 0.0018344663478825733, 5.220927470196464e-05],
    [0.600021513278993, 0.32788608759453725, 0.00931681846475694, 0.00011277923647784085],
    [0.600021513278993, 0.32788608759453725, 0.021417024244913943, 0.00015395663748552963],
    [0.600021513278993, 0.32788608759453725, 0.03604619956323486, 0.00016852416523906242],
    [0.600021513278993, 0.32788608759453725, 0.05067537488155578, 0.00015395663748552963],
    [0.600021513278993, 0.32788608759453725, 0.06277558066171278, 0.00011277923647784085],
    [0.600021513278993, 0.32788608759453725, 0.07025793277858716, 5.220927470196464e-05],
    [0.600021513278993, 0.3774746728983998, 0.0005726330328411847, 9.932666573353903e-06],
    [0.600021513278993, 0.3774746728983998, 0.002908267039110616, 2.1455930171917745e-05],
    [0.600021513278993, 0.3774746728983998, 0.006685375047601198, 2.9289814034534763e-05],
    [0.600021513278993, 0.3774746728983998, 0.011251906911303582, 3.206124491151792e-05],
    [0.600021513278993, 0.3774746728983998, 0.015818438775005963, 2.9289814034534763e-05],
    [0.600021513278993, 0.3774746728983998, 0.019595546783496547, 2.1455930171917745e-05],
    [0.600021513278993, 0.3774746728983998, 0.02193118078976598, 9.932666573353903e-06],
    [0.7735172465914375, 0.005091193335574707, 0.005633539340903985, 2.957808413998015e-05],
    [0.7735172465914375, 0.005091193335574707, 0.028611407025182795, 6.389274252183337e-05],
    [0.7735172465914375, 0.005091193335574707, 0.06577043443074397, 8.72209469189209e-05],
    [0.7735172465914375, 0.005091193335574707, 0.1106957800364939, 9.547387830065631e-05],
    [0.7735172465914375, 0.005091193335574707, 0.1556211256422438, 8.72209469189209e-05],
    [0.7735172465914375, 0.005091193335574707, 0.192780153047805, 6.389274252183337e-05],
    [0.7735172465914375, 0.005091193335574707, 0.2157580207320838, 2.957808413998015e-05],
    [0.7735172465914375, 0.025972827718168487, 0.005102184357191269, 5.8402825094393146e-05],
    [0.7735172465914375, 0.025972827718168487, 0.02591278138437483, 0.00012615815982685327],
    [0.7735172465914375, 0.025972827718168487, 0.059566972272952705, 0.00017222040762902857],
    [0.7735172465914375, 0.025972827718168487, 0.10025496284519701, 0.00018851607119271485],
    [0.7735172465914375, 0.025972827718168487, 0.1409429534174413, 0.00017222040762902857],
    [0.7735172465914375, 0.025972827718168487, 0.1745971443060192, 0.00012615815982685327],
    [0.7735172465914375, 0.025972827718168487, 0.19540774133320277, 5.8402825094393146e-05],
    [0.7735172465914375, 0.06019681089222771, 0.004231319381354176, 6.732457004421414e-05],
    [0.7735172465914375, 0.06019681089222771, 0.021489865206842148, 0.00014543035981880184],
    [0.7735172465914375, 0.06019681089222771, 0.04939979950192987, 0.00019852917864373598],
    [0.7735172465914375, 0.06019681089222771, 0.08314297125816739, 0.0002173142038756005],
    [0.7735172465914375, 0.06019681089222771, 0.1168861430144049, 0.00019852917864373598],
    [0.7735172465914375, 0.06019681089222771, 0.14479607730949262, 0.00014543035981880184],
    [0.7735172465914375, 0.06019681089222771, 0.16205462313498062, 6.732457004421414e-05],
    [0.7735172465914375, 0.10256189357973858, 0.00315329563048463, 5.661431971840105e-05],
    [0.7735172465914375, 0.10256189357973858, 0.016014838859729874, 0.000122294741461202],
    [0.7735172465914375, 0.10256189357973858, 0.036814089856388836, 0.00016694639692146028],
    [0.7735172465914375, 0.10256189357973858, 0.06196042991441197, 0.0001827430284290447],
    [0.7735172465914375, 0.10256189357973858, 0.08710676997243509, 0.00016694639692146028],
    [0.7735172465914375, 0.10256189357973858, 0.10790602096909405, 0.000122294741461202],
    [0.7735172465914375, 0.10256189357973858, 0.1207675641983393, 5.661431971840105e-05],
    [0.7735172465914375, 0.14661933655685638, 0.002032208005511928, 3.508352042253272e-05],
    [0.7735172465914375, 0.14661933655685638, 0.010321101333820911, 7.578524445694101e-05],
    [0.7735172465914375, 0.14661933655685638, 0.02372561817500464, 0.00010345558076110933],
    [0.7735172465914375, 0.14661933655685638, 0.03993170842585306, 0.00011324464908976107],
    [0.7735172465914375, 0.14661933655685638, 0.05613779867670147, 0.00010345558076110933],
    [0.7735172465914375, 0.14661933655685638, 0.0695423155178852, 7.578524445694101e-05],
    [0.7735172465914375, 0.14661933655685638, 0.07783120884619418, 3.508352042253272e-05],
    [0.7735172465914375, 0.18566134526772718, 0.0010387433406977141, 1.4484989673783696e-05],
    [0.7735172465914375, 0.18566134526772718, 0.005275530482162467, 3.1289576136120147e-05],
    [0.7735172465914375, 0.18566134526772718, 0.012127118787239752, 4.271387252396439e-05],
    [0.7735172465914375, 0.18566134526772718, 0.020410704070417663, 4.6755500956594955e-05],
    [0.7735172465914375, 0.18566134526772718, 0.028694289353595574, 4.271387252396439e-05],
    [0.7735172465914375, 0.18566134526772718, 0.035545877658672856, 3.1289576136120147e-05],
    [0.7735172465914375, 0.18566134526772718, 0.03978266480013761, 1.4484989673783696e-05],
    [0.7735172465914375, 0.21374025378434444, 0.0003242462039240369, 2.7557282411884136e-06],
    [0.7735172465914375, 0.21374025378434444, 0.0016467693851859012, 5.952753198656436e-06],
    [0.7735172465914375, 0.21374025378434444, 0.0037855089676504263, 8.126193214887081e-06],
    [0.7735172465914375, 0.21374025378434444, 0.006371249812109027, 8.895101571953295e-06],
    [0.7735172465914375, 0.21374025378434444, 0.008956990656567628, 8.126193214887081e-06],
    [0.7735172465914375, 0.21374025378434444, 0.011095730239032153, 5.952753198656436e-06],
    [0.7735172465914375, 0.21374025378434444, 0.012418253420294019, 2.7557282411884136e-06],
    [0.9111831665630028, 0.0019965479210930217, 0.0022092327904510703, 3.2346248098499535e-06],
    [0.9111831665630028, 0.0019965479210930217, 0.011220168131608909, 6.987235858563489e-06],
    [0.9111831665630028, 0.0019965479210930217, 0.0257923467990366, 9.538381103636173e-06],
    [0.9111831665630028, 0.0019965479210930217, 0.04341014275795209, 1.0440912061186168e-05],
    [0.9111831665630028, 0.0019965479210930217, 0.061027938716867576, 9.538381103636173e-06],
    [0.9111831665630028, 0.0019965479210930217, 0.07560011738429527, 6.987235858563489e-06],
    [0.9111831665630028, 0.0019965479210930217, 0.0846110527254531, 3.2346248098499535e-06],
    [0.9111831665630028, 0.010185430363304571, 0.0020008581289191318, 6.386864886908064e-06],
    [0.9111831665630028, 0.010185430363304571, 0.010161882763556732, 1.3796509327978036e-05],
    [0.9111831665630028, 0.010185430363304571, 0.023359614695116354, 1.883382306450163e-05],
    [0.9111831665630028, 0.010185430363304571, 0.03931570153684632, 2.0615897840089275e-05],
    [0.9111831665630028, 0.010185430363304571, 0.05527178837857628, 1.883382306450163e-05],
    [0.9111831665630028, 0.010185430363304571, 0.0684695203101359, 1.3796509327978036e-05],
    [0.9111831665630028, 0.010185430363304571, 0.0766305449447735, 6.386864886908064e-06],
    [0.9111831665630028, 0.02360661041950789, 0.0016593421929771705, 7.362536516796933e-06],
    [0.9111831665630028, 0.02360661041950789, 0.00842740451506477, 1.5904094658364103e-05],
    [0.9111831665630028, 0.02360661041950789, 0.019372485092801265, 2.1710919601183912e-05],
    [0.9111831665630028, 0.02360661041950789, 0.03260511150874466, 2.3765228067583696e-05],
    [0.9111831665630028, 0.02360661041950789, 0.045837737924688045, 2.1710919601183912e-05],
    [0.9111831665630028, 0.02360661041950789, 0.05678281850242454, 1.5904094658364103e-05],
    [0.9111831665630028, 0.02360661041950789, 0.06355088082451214, 7.362536516796933e-06],
    [0.9111831665630028, 0.040220380942747255, 0.0012365874600841732, 6.1912760233983285e-06],
    [0.9111831665630028, 0.040220380942747255, 0.006280333730132067, 1.3374010398120913e-05],
    [0.9111831665630028, 0.040220380942747255, 0.014436908937658293, 1.8257063400103498e-05],
    [0.9111831665630028, 0.040220380942747255, 0.024298226247124972, 1.9984564611631405e-05],
    [0.9111831665630028, 0.040220380942747255, 0.034159543556591655, 1.8257063400103498e-05],
    [0.9111831665630028, 0.040220380942747255, 0.04231611876411788, 1.3374010398120913e-05],
    [0.9111831665630028, 0.040220380942747255, 0.047359865034165775, 6.1912760233983285e-06],
    [0.9111831665630028, 0.05749782267138855, 0.0007969449206107246, 3.836692905414056e-06],
    [0.9111831665630028, 0.05749782267138855, 0.004047493790393334, 8.2877860101026e-06],
    [0.9111831665630028, 0.05749782267138855, 0.009304171050224937, 1.1313781740007735e-05],
    [0.9111831665630028, 0.05749782267138855, 0.015659505382804324, 1.2384302843785843e-05],
    [0.9111831665630028, 0.05749782267138855, 0.02201483971538371, 1.1313781740007735e-05],
    [0.9111831665630028, 0.05749782267138855, 0.027271516975215314, 8.2877860101026e-06],
    [0.9111831665630028, 0.05749782267138855, 0.030522065844997923, 3.836692905414056e-06],
    [0.9111831665630028, 0.07280842594043248, 0.00040735063878400806, 1.5840615892328912e-06],
    [0.9111831665630028, 0.07280842594043248, 0.0020688370530394257, 3.4217915798940997e-06],
    [0.9111831665630028, 0.07280842594043248, 0.004755736466405178, 4.671139318453376e-06],
    [0.9111831665630028, 0.07280842594043248, 0.008004203748282365, 5.113127093540913e-06],
    [0.9111831665630028, 0.07280842594043248, 0.01125267103015955, 4.671139318453376e-06],
    [0.9111831665630028, 0.07280842594043248, 0.013939570443525303, 3.4217915798940997e-06],
    [0.9111831665630028, 0.07280842594043248, 0.01560105685778072, 1.5840615892328912e-06],
    [0.9111831665630028, 0.08381977096905041, 0.00012715547057372996, 3.0136322880032893e-07],
    [0.9111831665630028, 0.08381977096905041, 0.0006457924057879848, 6.509861521849298e-07],
    [0.9111831665630028, 0.08381977096905041, 0.001484514447100306, 8.886710193301163e-07],
    [0.9111831665630028, 0.08381977096905041, 0.0024985312339733923, 9.727579411367095e-07],
    [0.9111831665630028, 0.08381977096905041, 0.003512548020846479, 8.886710193301163e-07],
    [0.9111831665630028, 0.08381977096905041, 0.0043512700621588, 6.509861521849298e-07],
    [0.9111831665630028, 0.08381977096905041, 0.004869906997373055, 3.0136322880032893e-07],
];
/// Degree-7 rule on the reference triangle `{x,y >= 0, x+y <= 1}` (16 points).
/// Entries are `[x, y, w]`; weights sum to the reference area 1/2.
pub static TRI_DEG_7: [[f64; 3]; 16] = [
    [0.057104196114517725, 0.06546699455501445, 0.0235683681933824],
    [0.057104196114517725, 0.311164552244357, 0.04418508852236186],
    [0.057104196114517725, 0.6317312516411252, 0.04418508852236186],
    [0.057104196114517725, 0.8774288093304677, 0.0235683681933824],
    [0.2768430136381238, 0.05021012321136978, 0.03538806789808589],
    [0.2768430136381238, 0.23864865973144292, 0.06634421610704966],
    [0.2768430136381238, 0.48450832663043325, 0.06634421610704966],
    [0.2768430136381238, 0.6729468631505063, 0.03538806789808589],
    [0.5835904323689168, 0.028912084224389012, 0.022584049282369907],
    [0.5835904323689168, 0.13741910413457437, 0.04233972452174626],
    [0.5835904323689168, 0.2789904634965088, 0.04233972452174626],
    [0.5835904323689168, 0.38749748340669415, 0.022584049282369907],
    [0.8602401356562195, 0.00970378512694611, 0.0054232259105252536],
    [0.8602401356562195, 0.046122079906452035, 0.010167259564478788],
    [0.8602401356562195, 0.09363778443732848, 0.010167259564478788],
    [0.8602401356562195, 0.1300560792168344, 0.0054232259105252536],
];

/// Degree-7 Gauss-Legendre rule on `[0,1]` (4 points). Entries are `[t, w]`.
pub static GAUSS_1D_DEG_7: [[f64; 2]; 4] = [
    [0.06943184420297371, 0.1739274225687269],
    [0.33000947820757187, 0.3260725774312731],
    [0.6699905217924281, 0.3260725774312731],
    [0.9305681557970262, 0.1739274225687269],
];
