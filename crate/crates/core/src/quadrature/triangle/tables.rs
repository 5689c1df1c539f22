//! Fully symmetric Gauss-type rules on the unit triangle, degrees 1 through 20.
//!
//! Orbit parameters are barycentric coordinates; weights sum to 1/2. All points are
//! strictly interior and all weights positive. Values were refined to full double
//! precision against the moment equations and are checked by the monomial oracle
//! in the tests.

#![allow(clippy::excessive_precision, clippy::unreadable_literal)]

use super::Orbit::{self, Centroid, Edge, Interior};

pub(super) static RULES: [(usize, &[Orbit]); 20] = [
    // degree 1, 1 point
    (1, &[
        Centroid(5.00000000000000000e-01),
    ]),
    // degree 2, 3 points
    (3, &[
        Edge(1.66666666666666657e-01, 1.66666666666666657e-01),
    ]),
    // degree 3, 6 points
    (6, &[
        Edge(4.45948490915964890e-01, 1.11690794839005680e-01),
        Edge(9.15762135097708263e-02, 5.49758718276609840e-02),
    ]),
    // degree 4, 6 points
    (6, &[
        Edge(4.45948490915964890e-01, 1.11690794839005736e-01),
        Edge(9.15762135097707430e-02, 5.49758718276609354e-02),
    ]),
    // degree 5, 7 points
    (7, &[
        Edge(1.01286507323456343e-01, 6.29695902724135698e-02),
        Edge(4.70142064105115109e-01, 6.61970763942530960e-02),
        Centroid(1.12500000000000003e-01),
    ]),
    // degree 6, 12 points
    (12, &[
        Edge(2.19429982549782965e-01, 8.56665620764905100e-02),
        Edge(4.80137964112215043e-01, 4.03655447965154887e-02),
        Interior(1.93717243612407872e-02, 1.41619015923968167e-01, 2.03172798968303328e-02),
    ]),
    // degree 7, 15 points
    (15, &[
        Edge(4.73195653689251039e-01, 2.65904166483802093e-02),
        Edge(5.77976400545064523e-02, 2.04590851970284440e-02),
        Interior(4.69712061300854855e-02, 2.59339011865785785e-01, 2.78772702703455472e-02),
        Edge(2.41663606397247377e-01, 6.38626242805669236e-02),
    ]),
    // degree 8, 16 points
    (16, &[
        Edge(1.70569307751760213e-01, 5.16086852673591223e-02),
        Edge(4.59292588292723181e-01, 4.75458171336423097e-02),
        Centroid(7.21578038388935861e-02),
        Edge(5.05472283170309775e-02, 1.62292488115990396e-02),
        Interior(8.39477740995760516e-03, 2.63112829634638112e-01, 1.36151570872174964e-02),
    ]),
    // degree 9, 19 points
    (19, &[
        Edge(4.89682519198737620e-01, 1.56673501135695357e-02),
        Centroid(4.85678981413994182e-02),
        Edge(1.88203535619032719e-01, 3.98238694636051244e-02),
        Interior(3.68384120547362859e-02, 2.21962989160765706e-01, 2.16417696886446881e-02),
        Edge(4.37089591492936635e-01, 3.89137705023871391e-02),
        Edge(4.47295133944527121e-02, 1.27888378293490156e-02),
    ]),
    // degree 10, 25 points
    (25, &[
        Edge(4.95173459801170501e-01, 4.89629524920913613e-03),
        Edge(1.91394152428412505e-02, 3.19267961505933021e-03),
        Interior(3.47236204823274455e-02, 1.33734755100869185e-01, 1.44811407316281730e-02),
        Centroid(4.18074371869869635e-02),
        Interior(3.75827273411916546e-02, 3.26693136281336949e-01, 1.93695245430094524e-02),
        Edge(1.84485012685246502e-01, 3.93168848731886358e-02),
        Edge(4.28234820943718897e-01, 3.76236639842719850e-02),
    ]),
    // degree 11, 28 points
    (28, &[
        Edge(3.08468956355880362e-02, 6.12464847535398177e-03),
        Edge(4.98780165178460799e-01, 6.23274593694068783e-03),
        Interior(1.43666625695555994e-02, 1.59303619837693505e-01, 7.27881166890462575e-03),
        Centroid(4.07225673546756373e-02),
        Edge(1.13207827286693957e-01, 2.00646211906541569e-02),
        Edge(4.36655016393176110e-01, 3.15474360799493370e-02),
        Edge(2.14483458619269318e-01, 3.39225538718475675e-02),
        Interior(4.76640669721507468e-02, 3.10631216313463132e-01, 2.03214243279432362e-02),
    ]),
    // degree 12, 33 points
    (33, &[
        Edge(2.71462507014926080e-01, 3.12706065979513823e-02),
        Edge(1.09257827659354295e-01, 1.42430260344387719e-02),
        Edge(4.40111648658593091e-01, 2.49591674640304712e-02),
        Interior(1.16296019677926590e-01, 2.55454228638517356e-01, 2.16136818297071043e-02),
        Interior(2.13824902561705887e-02, 1.27279717233589357e-01, 7.54183878825571887e-03),
        Interior(2.30341563552671387e-02, 2.91655679738340945e-01, 1.08917925193037796e-02),
        Edge(4.88203750945541526e-01, 1.21334190407260158e-02),
        Edge(2.46463634363355936e-02, 3.96582125498681944e-03),
    ]),
    // degree 13, 37 points
    (37, &[
        Edge(4.96135894741045913e-01, 4.97073818053639024e-03),
        Edge(4.69608689653491729e-01, 1.63906208018614295e-02),
        Edge(2.31110284949082090e-01, 2.30312047963891729e-02),
        Interior(1.89880043837589510e-02, 2.92078688576636381e-01, 9.06274932310041290e-03),
        Centroid(2.58113233321453986e-02),
        Interior(9.77360310660162906e-02, 2.66745253310351371e-01, 1.86059802286307509e-02),
        Edge(4.14477570279054464e-01, 2.34735477710775776e-02),
        Edge(1.13559912572133243e-01, 1.54515489878799053e-02),
        Interior(2.19663442065292126e-02, 1.26799775783837332e-01, 7.69653634189109218e-03),
        Edge(2.48959314912163797e-02, 4.01469989762920886e-03),
    ]),
    // degree 14, 42 points
    (42, &[
        Edge(4.17644719340453940e-01, 1.63941767720626741e-02),
        Interior(1.46469500556544105e-02, 2.98372882136257733e-01, 7.21815405676692022e-03),
        Edge(6.17998830908726010e-02, 7.21684983488833382e-03),
        Interior(9.29162493569718195e-02, 3.36861459796345020e-01, 1.92857553935303419e-02),
        Edge(2.73477528308838647e-01, 2.58870522536457925e-02),
        Edge(1.77205532412543443e-01, 2.10812943684965080e-02),
        Edge(1.93909612487010476e-02, 2.46170180120004094e-03),
        Edge(4.88963910362178622e-01, 1.09417906847144447e-02),
        Interior(5.71247574036479397e-02, 1.72266687821355569e-01, 1.23328766062818368e-02),
        Interior(1.26833093287202509e-03, 1.18974497696956852e-01, 2.50511441925033596e-03),
    ]),
    // degree 15, 49 points
    (49, &[
        Edge(1.29978229933078587e-01, 3.69875203352306586e-03),
        Centroid(1.48652098740357074e-02),
        Edge(4.60076949297059723e-01, 1.07970439682192783e-02),
        Interior(8.45942214821916588e-02, 1.82321783407191074e-01, 1.21150043915627774e-02),
        Interior(1.60270897863453790e-02, 1.50200384065238779e-01, 5.61425214943902032e-03),
        Interior(9.76504424302423180e-02, 3.23111315163712332e-01, 1.55376102352554751e-02),
        Edge(4.91685816630297257e-01, 7.91613817501089605e-03),
        Edge(2.21532340795142030e-01, 2.31436430525990243e-02),
        Edge(3.96933737409060627e-01, 2.31680206956036069e-02),
        Interior(1.84542519046331233e-02, 3.07947681483672853e-01, 8.21838104641394590e-03),
        Edge(5.63419176961000925e-02, 7.54223712379853764e-03),
        Interior(1.11353527401368405e-03, 3.80352293011092801e-02, 1.23763300727895709e-03),
    ]),
    // degree 16, 55 points
    (55, &[
        Interior(9.66495440366016770e-03, 4.13769485827085226e-01, 4.09110527661105811e-03),
        Interior(3.03059433551862642e-02, 3.04179448229479787e-01, 6.99180356232678192e-03),
        Edge(6.66744722402383139e-02, 6.21271279778050182e-03),
        Interior(1.08129727761037131e-02, 8.96090890227058262e-02, 2.87593498524858250e-03),
        Interior(1.06653160536148386e-01, 2.96615372400383048e-01, 1.58230308409916254e-02),
        Edge(2.41321680701378355e-01, 2.05920205348962791e-02),
        Edge(4.12798095955223709e-01, 2.04926098934076865e-02),
        Interior(5.13543153440131489e-02, 1.69763355150289785e-01, 8.82654052355164552e-03),
        Edge(1.50063736587035174e-01, 1.43917483513744515e-02),
        Interior(3.69694270735556425e-03, 2.14048779925847116e-01, 2.30734531986456987e-03),
        Edge(4.69548030996685017e-01, 1.35468347338552203e-02),
        Centroid(2.31139551570956753e-02),
        Edge(1.70416294057183851e-02, 1.89456761913210973e-03),
    ]),
    // degree 17, 60 points
    (60, &[
        Edge(4.17103444361599185e-01, 1.36554632640510532e-02),
        Interior(1.15751759031806154e-02, 7.25054707990024222e-02, 2.29217420086793352e-03),
        Edge(1.80358116266370633e-01, 1.31563152940089925e-02),
        Interior(1.32296727600868941e-02, 4.15475459295229055e-01, 5.19921997791976832e-03),
        Interior(1.31358708340026942e-02, 2.71791870055354823e-01, 4.34610725050059606e-03),
        Interior(1.57505477926869891e-01, 2.99218942476970340e-01, 1.30858129676684944e-02),
        Edge(2.85706502436586629e-01, 1.88581185763976415e-02),
        Interior(6.73493778673611987e-02, 3.06281591746186521e-01, 1.12438862733455335e-02),
        Interior(7.80423405682824228e-02, 1.68722513495259463e-01, 1.02789491602272593e-02),
        Edge(6.66540634795969311e-02, 6.22950040115272108e-03),
        Interior(1.60176423621192984e-02, 1.59192287472792682e-01, 3.98915010296479675e-03),
        Edge(1.47554916607539541e-02, 1.38694378881882110e-03),
        Edge(4.65597871618890324e-01, 1.25097254752486783e-02),
    ]),
    // degree 18, 67 points
    (67, &[
        Interior(9.04270403543406126e-02, 3.85044034413163649e-01, 7.66412909727657004e-03),
        Edge(4.74918211324045714e-01, 6.55351374586937794e-03),
        Edge(1.51638506972604864e-01, 1.01591694227291980e-02),
        Interior(1.24989324834954407e-02, 4.72761418326517815e-02, 2.10875838737222161e-03),
        Centroid(1.53742606195579282e-02),
        Interior(5.40117353390242375e-02, 3.02061957712870810e-01, 8.18295420699328285e-03),
        Interior(1.05050188192419361e-02, 2.56506159774241516e-01, 3.86491764000311371e-03),
        Edge(4.11067101875919494e-01, 1.67359970299239477e-02),
        Interior(6.61224580284033858e-02, 1.78479125565887631e-01, 8.45582695874004010e-03),
        Edge(2.65614609905374222e-01, 1.55581983010030650e-02),
        Edge(3.75894434106834605e-03, 2.66002808473890257e-04),
        Interior(1.49066910125773833e-01, 2.68573306396013844e-01, 1.37964432442897397e-02),
        Interior(1.16918246746670861e-02, 4.11065668674618356e-01, 4.79306223718075231e-03),
        Interior(1.43315247789419543e-02, 1.32778830271389342e-01, 3.82085248635981789e-03),
        Edge(7.24387055673328673e-02, 6.89514330238346924e-03),
    ]),
    // degree 19, 73 points
    (73, &[
        Interior(5.00514235235112025e-03, 1.42422282571128073e-01, 1.46284624394013834e-03),
        Edge(5.25262798541027351e-02, 3.55469681139745051e-03),
        Interior(9.77706143867649799e-03, 6.00838999627031217e-02, 1.66369442029692125e-03),
        Interior(3.91424494346099688e-02, 1.30700669960533561e-01, 4.84775954081209486e-03),
        Interior(1.29312809767978903e-01, 3.11318383223986583e-01, 1.31731323537226906e-02),
        Edge(1.11448055716998909e-01, 7.61747825850231722e-03),
        Edge(1.16390273279226974e-02, 8.82596209154291465e-04),
        Edge(2.55162133153124637e-01, 1.58764272937650178e-02),
        Interior(7.45611893043548052e-02, 2.21433941889113778e-01, 9.05403729521523162e-03),
        Edge(4.03969717966386088e-01, 1.57686793226198378e-02),
        Interior(4.08883144649780025e-02, 3.54025926999712581e-01, 8.05110473046970719e-03),
        Edge(1.78171006079627159e-01, 1.23259905267924050e-02),
        Edge(4.59194388956827571e-01, 1.14917854885616278e-02),
        Centroid(1.72345804254526759e-02),
        Edge(4.92512449865874335e-01, 5.16094109120941030e-03),
        Interior(1.49236389074385908e-02, 2.41894104006892763e-01, 4.22796241954673333e-03),
        Interior(2.06910384910225778e-03, 3.64620414338709176e-01, 1.64106875741985869e-03),
    ]),
    // degree 20, 79 points
    (79, &[
        Edge(1.86294997744540947e-01, 9.17346297425291474e-03),
        Edge(3.73108805988846964e-02, 2.16127541066557733e-03),
        Edge(4.76245611540498992e-01, 7.10182530340844071e-03),
        Interior(4.85493760762375354e-03, 6.40905856084340586e-02, 1.12986960212586559e-03),
        Interior(1.06227204720270044e-01, 2.15607057390094392e-01, 7.72260782209923009e-03),
        Edge(4.45551056955924840e-01, 9.45239993323244813e-03),
        Interior(7.57078050469652854e-03, 1.59133707657067219e-01, 2.20289741855849742e-03),
        Interior(1.39808071991799898e-01, 3.17860123835772002e-01, 1.16917457318277372e-02),
        Edge(2.54579267673339105e-01, 1.40832013075202472e-02),
        Centroid(1.39101107014531159e-02),
        Interior(4.65603649076643186e-02, 1.98518132228788169e-01, 5.98639857895469016e-03),
        Edge(3.93425347817099869e-01, 1.37880506290704585e-02),
        Interior(3.83636847753745930e-02, 9.99522962881386617e-02, 4.14571152761385783e-03),
        Interior(9.83154829280256069e-03, 4.20023758816224058e-01, 3.69568150025529783e-03),
        Interior(5.49874791429868087e-02, 3.33134817309587494e-01, 8.66722556721933289e-03),
        Interior(1.07372128560110879e-02, 2.80581411423665217e-01, 3.57820023845768515e-03),
        Edge(1.09761410283977633e-02, 7.98840791066619859e-04),
        Edge(1.09383596711714604e-01, 7.83023077607453329e-03),
    ]),
];
