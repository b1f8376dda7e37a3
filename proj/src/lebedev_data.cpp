// Lebedev-Laikov octahedral quadrature grids, expanded from the published
// orbit parameters (V.I. Lebedev, D.N. Laikov, Doklady Mathematics 59 (1999)
// 477-481). Orbit codes follow the reference implementation: 1 = (1,0,0),
// 2 = (1,1,0)/sqrt2, 3 = (1,1,1)/sqrt3, 4 = (a,a,b), 5 = (a,b,0), 6 = (a,b,c).
// Weights in the tables sum to 1; callers rescale to 4pi.

#include "ddpb/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace ddpb::quad::detail {

namespace {

struct Orbit {
  int code;
  double v;
  double a = 0.0;
  double b = 0.0;
};

using Out = std::vector<std::array<double, 4>>;

void push(Out& o, double x, double y, double z, double w) {
  o.push_back({x, y, z, w});
}

void gen_oh(const Orbit& ob, Out& o) {
  const double v = ob.v;
  switch (ob.code) {
    case 1: {
      for (int dir = 0; dir < 3; ++dir)
        for (int s = -1; s <= 1; s += 2) {
          double p[3] = {0, 0, 0};
          p[dir] = s;
          push(o, p[0], p[1], p[2], v);
        }
      break;
    }
    case 2: {
      const double q = std::sqrt(0.5);
      for (int dir = 0; dir < 3; ++dir)
        for (int s1 = -1; s1 <= 1; s1 += 2)
          for (int s2 = -1; s2 <= 1; s2 += 2) {
            double p[3];
            p[dir] = 0;
            p[(dir + 1) % 3] = s1 * q;
            p[(dir + 2) % 3] = s2 * q;
            push(o, p[0], p[1], p[2], v);
          }
      break;
    }
    case 3: {
      const double q = std::sqrt(1.0 / 3.0);
      for (int s3 = -1; s3 <= 1; s3 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2)
          for (int s1 = -1; s1 <= 1; s1 += 2)
            push(o, q * s1, q * s2, q * s3, v);
      break;
    }
    case 4: {
      const double a = ob.a, b = std::sqrt(1.0 - 2.0 * a * a);
      for (int dir = 0; dir < 3; ++dir)
        for (int s3 = -1; s3 <= 1; s3 += 2)
          for (int s2 = -1; s2 <= 1; s2 += 2)
            for (int s1 = -1; s1 <= 1; s1 += 2) {
              double p[3];
              p[dir] = b * s3;
              p[(dir + 1) % 3] = a * s1;
              p[(dir + 2) % 3] = a * s2;
              push(o, p[0], p[1], p[2], v);
            }
      break;
    }
    case 5: {
      const double a = ob.a, b = std::sqrt(1.0 - a * a);
      double aa = a, bb = b;
      for (int swap = 0; swap < 2; ++swap) {
        for (int dir = 0; dir < 3; ++dir)
          for (int s2 = -1; s2 <= 1; s2 += 2)
            for (int s1 = -1; s1 <= 1; s1 += 2) {
              double p[3];
              p[dir] = 0;
              p[(dir + 1) % 3] = aa * s1;
              p[(dir + 2) % 3] = bb * s2;
              push(o, p[0], p[1], p[2], v);
            }
        std::swap(aa, bb);
      }
      break;
    }
    case 6: {
      const double a = ob.a, b = ob.b;
      const double c = std::sqrt(1.0 - a * a - b * b);
      const double perm[2][5] = {{a, b, c, a, b}, {b, a, c, b, a}};
      for (int rev = 0; rev < 2; ++rev)
        for (int dir = 0; dir < 3; ++dir)
          for (int s3 = -1; s3 <= 1; s3 += 2)
            for (int s2 = -1; s2 <= 1; s2 += 2)
              for (int s1 = -1; s1 <= 1; s1 += 2)
                push(o, perm[rev][dir] * s1, perm[rev][dir + 1] * s2,
                     perm[rev][dir + 2] * s3, v);
      break;
    }
    default:
      throw std::logic_error("lebedev: bad orbit code");
  }
}

const std::vector<Orbit>& orbits_for(int n) {
  static const std::vector<Orbit> t6 = {{1, 1.0 / 6.0}};
  static const std::vector<Orbit> t14 = {{1, 2.0 / 30.0}, {3, 3.0 / 40.0}};
  static const std::vector<Orbit> t26 = {
      {1, .04761904761904762}, {2, .03809523809523810}, {3, .03214285714285714}};
  static const std::vector<Orbit> t38 = {{1, .009523809523809524},
                                         {3, .03214285714285714},
                                         {5, .02857142857142857, .4597008433809831}};
  static const std::vector<Orbit> t50 = {{1, .01269841269841270},
                                         {2, .02257495590828924},
                                         {3, .02109375000000000},
                                         {4, .02017333553791887, .3015113445777636}};
  static const std::vector<Orbit> t74 = {{1, .00051306717973385},
                                         {2, .01660406956574204},
                                         {3, -.02958603896103896},
                                         {4, .02657620708215946, .4803844614152614},
                                         {5, .01652217099371571, .3207726489807764}};
  static const std::vector<Orbit> t86 = {{1, .01154401154401154},
                                         {3, .01194390908585628},
                                         {4, .01111055571060340, .3696028464541502},
                                         {4, .01187650129453714, .6943540066026664},
                                         {5, .01181230374690448, .3742430390903412}};
  static const std::vector<Orbit> t110 = {{1, .003828270494937162},
                                          {3, .009793737512487512},
                                          {4, .008211737283191111, .1851156353447362},
                                          {4, .009942814891178103, .6904210483822922},
                                          {4, .009595471336070963, .3956894730559419},
                                          {5, .009694996361663028, .4783690288121502}};
  static const std::vector<Orbit> t146 = {
      {1, .5996313688621381e-3},
      {2, .7372999718620756e-2},
      {3, .7210515360144488e-2},
      {4, .7116355493117555e-2, .6764410400114264},
      {4, .6753829486314477e-2, .4174961227965453},
      {4, .7574394159054034e-2, .1574676672039082},
      {6, .6991087353303262e-2, .1403553811713183, .4493328323269557}};
  static const std::vector<Orbit> t170 = {
      {1, .5544842902037365e-2},
      {2, .6071332770670752e-2},
      {3, .6383674773515093e-2},
      {4, .5183387587747790e-2, .2551252621114134},
      {4, .6317929009813725e-2, .6743601460362766},
      {4, .6201670006589077e-2, .4318910696719410},
      {5, .5477143385137348e-2, .2613931360335988},
      {6, .5968383987681156e-2, .4990453161796037, .1446630744325115}};
  static const std::vector<Orbit> t194 = {
      {1, .1782340447244611e-2},
      {2, .5716905949977102e-2},
      {3, .5573383178848738e-2},
      {4, .5608704082587997e-2, .6712973442695226},
      {4, .5158237711805383e-2, .2892465627575439},
      {4, .5518771467273614e-2, .4446933178717437},
      {4, .4106777028169394e-2, .1299335447650067},
      {5, .5051846064614808e-2, .3457702197611283},
      {6, .5530248916233094e-2, .1590417105383530, .8360360154824589}};
  static const std::vector<Orbit> t230 = {
      {1, -.5522639919727325e-1},
      {3, .4450274607445226e-2},
      {4, .4496841067921404e-2, .4492044687397611},
      {4, .5049153450478750e-2, .2520419490210201},
      {4, .3976408018051883e-2, .6981906658447242},
      {4, .4401400650381014e-2, .6587405243460960},
      {4, .1724544350544401e-1, .0403854405009766},
      {5, .4231083095357343e-2, .5823842309715584},
      {5, .5198069864064399e-2, .3545877390518688},
      {6, .4695720972568883e-2, .2272181808998187, .4864661535886647}};
  static const std::vector<Orbit> t266 = {
      {1, -.1313769127326952e-2},
      {2, -.2522728704859336e-2},
      {3, .4186853881700583e-2},
      {4, .5315167977810885e-2, .7039373391585475},
      {4, .4047142377086219e-2, .1012526248572414},
      {4, .4112482394406990e-2, .4647448726420539},
      {4, .3595584899758782e-2, .3277420654971629},
      {4, .4256131351428158e-2, .6620338663699974},
      {5, .4229582700647240e-2, .8506508083520399},
      {6, .4080914225780505e-2, .3233484542692899, .1153112011009701},
      {6, .4071467593830964e-2, .2314790158712601, .5244939240922365}};
  static const std::vector<Orbit> t302 = {
      {1, .8545911725128148e-3},
      {3, .3599119285025571e-2},
      {4, .3449788424305883e-2, .3515640345570105},
      {4, .3604822601419882e-2, .6566329410219612},
      {4, .3576729661743367e-2, .4729054132581005},
      {4, .2352101413689164e-2, .0961830852261478},
      {4, .3108953122413675e-2, .2219645236294178},
      {4, .3650045807677255e-2, .7011766416089545},
      {5, .2982344963171804e-2, .2644152887060663},
      {5, .3600820932216460e-2, .5718955891878961},
      {6, .3571540554273387e-2, .2510034751770465, .8000727494073951},
      {6, .3392312205006170e-2, .1233548532583327, .4127724083168531}};
  static const std::vector<Orbit> t350 = {
      {1, .3006796749453936e-2},
      {3, .3050627745650771e-2},
      {4, .1621104600288991e-2, .7068965463912316},
      {4, .3005701484901752e-2, .4794682625712025},
      {4, .2990992529653774e-2, .1927533154878019},
      {4, .2982170644107595e-2, .6930357961327123},
      {4, .2721564237310992e-2, .3608302115520091},
      {4, .3033513795811141e-2, .6498486161496169},
      {5, .3007949555218533e-2, .1932945013230339},
      {5, .2881964603055307e-2, .3800494919899303},
      {6, .2958357626535696e-2, .2899558825499574, .7934537856582315},
      {6, .3036020026407088e-2, .0968412145510396, .8280801506686862},
      {6, .2832187403926303e-2, .1833434647041659, .9074658265305127}};
  static const std::vector<Orbit> t434 = {
      {1, .5265897968224436e-3},
      {2, .2548219972002607e-2},
      {3, .2512317418927307e-2},
      {4, .2530403801186355e-2, .6909346307509111},
      {4, .2014279020918528e-2, .1774836054609158},
      {4, .2501725168402936e-2, .4914342637784746},
      {4, .2513267174597564e-2, .6456664707424256},
      {4, .2302694782227416e-2, .2861289010307638},
      {4, .1462495621594614e-2, .0756808436717802},
      {4, .2445373437312980e-2, .3927259763368002},
      {5, .2417442375638981e-2, .8818132877794288},
      {5, .1910951282179532e-2, .9776428111182649},
      {6, .2416930044324775e-2, .2054823696403044, .8689460322872412},
      {6, .2512236854563495e-2, .5905157048925271, .7999278543857286},
      {6, .2496644054553086e-2, .5550152361076807, .7717462626915901},
      {6, .2236607760437849e-2, .9371809858553722, .3344363145343455}};
  static const std::vector<Orbit> t590 = {
      {1, .3095121295306187e-3},
      {3, .1852379698597489e-2},
      {4, .1871790639277744e-2, .7040954938227469},
      {4, .1858812585438317e-2, .6807744066455244},
      {4, .1852028828296213e-2, .6372546939258752},
      {4, .1846715956151242e-2, .5044419707800358},
      {4, .1818471778162769e-2, .4215761784010967},
      {4, .1749564657281154e-2, .3317920736472123},
      {4, .1617210647254411e-2, .2384736701421887},
      {4, .1384737234851692e-2, .1459036449157763},
      {4, .9764331165051050e-3, .0609503411550720},
      {5, .1857161196774078e-2, .6116843442009876},
      {5, .1705153996395864e-2, .3964755348199858},
      {5, .1300321685886048e-2, .1724782009907724},
      {6, .1842866472905286e-2, .5610263808622060, .3518280927733519},
      {6, .1802658934377451e-2, .4742392842551980, .2634716655937950},
      {6, .1849830560443660e-2, .5984126497885380, .1816640840360209},
      {6, .1713904507106709e-2, .3791035407695563, .1720795225656878},
      {6, .1555213603396808e-2, .2778673190586244, .0821302158193251},
      {6, .1802239128008525e-2, .5033564271075117, .0899920584207488}};
  static const std::vector<Orbit> t770 = {
      {1, .2192942088181184e-3},
      {2, .1436433617319080e-2},
      {3, .1421940344335877e-2},
      {4, .6798123511050502e-3, .0508720441050236},
      {4, .9913184235294911e-3, .1228198790178831},
      {4, .1180207833238949e-2, .2026890814408786},
      {4, .1296599602080921e-2, .2847745156464294},
      {4, .1365871427428316e-2, .3656719078978026},
      {4, .1402988604775325e-2, .4428264886713469},
      {4, .1418645563595609e-2, .5140619627249735},
      {4, .1421376741851662e-2, .6306401219166803},
      {4, .1423996475490962e-2, .6716883332022612},
      {4, .1431554042178567e-2, .6979792685336881},
      {5, .9254401499865368e-3, .1446865674195309},
      {5, .1250239995053509e-2, .3390263475411216},
      {5, .1394365843329230e-2, .5335804651263506},
      {6, .1127089094671749e-2, .0694402439334941, .2355187894242326},
      {6, .1345753760910670e-2, .2269004109529460, .4102182474045730},
      {6, .1424957283316783e-2, .0802557460777534, .6214302417481605},
      {6, .1261523341237750e-2, .1467999527896572, .3245284345717394},
      {6, .1392547106052696e-2, .1571507769824727, .5224482189696630},
      {6, .1418761677877656e-2, .2365702993157246, .6017546634089558},
      {6, .1338366684479554e-2, .0771481586676573, .4346575516141163},
      {6, .1393700862676131e-2, .3062936666210730, .4908826589037616},
      {6, .1415914757466932e-2, .3822477379524787, .5648768149099500}};
  static const std::vector<Orbit> t974 = {
      {1, .1438294190527431e-3},
      {3, .1125772288287004e-2},
      {4, .4948029341949241e-3, .0429296354534135},
      {4, .7357990109125470e-3, .1051426854086404},
      {4, .8889132771304384e-3, .1750024867623087},
      {4, .9888347838921435e-3, .2477653379650257},
      {4, .1053299681709471e-2, .3206567123955957},
      {4, .1092778807014578e-2, .3916520749849983},
      {4, .1114389394063227e-2, .4590825874187624},
      {4, .1123724788051555e-2, .5214563888415861},
      {4, .1125239325243814e-2, .6253170244654199},
      {4, .1126153271815905e-2, .6637926744523170},
      {4, .1130286931123841e-2, .6910410398498301},
      {4, .1134986534363955e-2, .7052907007457760},
      {5, .6823367927109931e-3, .1236686762657990},
      {5, .9454158160447096e-3, .2940777114468387},
      {5, .1074429975385679e-2, .4697753849207649},
      {5, .1129300086569132e-2, .6334563241139567},
      {6, .8436884500901954e-3, .0597404861418134, .2029128752777523},
      {6, .1075255720448885e-2, .1375760408473636, .4602621942484054},
      {6, .1108577236864462e-2, .3391016526336286, .5030673999662036},
      {6, .9566475323783357e-3, .1271675191439820, .2817606422442134},
      {6, .1080663250717391e-2, .2693120740413512, .4331561291720157},
      {6, .1126797131196295e-2, .1419786452601918, .6256167358580814},
      {6, .1022568715358061e-2, .0670928460073826, .3798395216859157},
      {6, .1108960267713108e-2, .0705773818325617, .5517505421423520},
      {6, .1122790653435766e-2, .2783888477882155, .6029619156159187},
      {6, .1032401847117460e-2, .1979578938917407, .3589606329589096},
      {6, .1107249382283854e-2, .2087307061103274, .5348666438135476},
      {6, .1121780048519972e-2, .4055122137872836, .5674997546074373}};
  static const std::vector<Orbit> t1202 = {
      {1, .1105189233267572e-3},
      {2, .9205232738090741e-3},
      {3, .9133159786443561e-3},
      {4, .3690421898017899e-3, .0371263644965709},
      {4, .5603990928680660e-3, .0914006041226222},
      {4, .6865297629282609e-3, .1531077852469906},
      {4, .7720338551145630e-3, .2180928891660612},
      {4, .8301545958894795e-3, .2839874532200175},
      {4, .8686692550179628e-3, .3491177600963764},
      {4, .8927076285846890e-3, .4121431461444309},
      {4, .9060820238568219e-3, .4718993627149127},
      {4, .9119777254940867e-3, .5273145452842337},
      {4, .9128720138604181e-3, .6209475332444019},
      {4, .9130714935691735e-3, .6569722711857291},
      {4, .9152873784554116e-3, .6841788309070143},
      {4, .9187436274321654e-3, .7012604330123631},
      {5, .5176977312965694e-3, .1072382215478166},
      {5, .7331143682101417e-3, .2582068959496968},
      {5, .8463232836379928e-3, .4172752955306717},
      {5, .9031122694253992e-3, .5700366911792503},
      {6, .6485778453163257e-3, .9827986018263947, .1771774022615325},
      {6, .7435030910982369e-3, .9624249230326228, .2475716463426288},
      {6, .7998527891839054e-3, .9402007994128811, .3354616289066489},
      {6, .8101731497468018e-3, .9320822040143202, .3173615246611977},
      {6, .8483389574594330e-3, .9043674199393299, .4090268427085357},
      {6, .8556299257311812e-3, .8912407560074747, .3854291150669224},
      {6, .8803208679738260e-3, .8676435628462708, .4932221184851285},
      {6, .8811048182425720e-3, .8581979986041619, .4785320675922435},
      {6, .8850282341265444e-3, .8396753624049856, .4507422593157064},
      {6, .9021342299040653e-3, .8165288564022188, .5632123020762100},
      {6, .9010091677105086e-3, .8015469370783529, .5434303569693900},
      {6, .9022692938426915e-3, .7773563069070351, .5123518486419871},
      {6, .9158016174693465e-3, .7661621213900394, .6394279634749102},
      {6, .9131578003189435e-3, .7553584143533510, .6269805509024392},
      {6, .9107813579482705e-3, .7344305757559503, .6031161693096310},
      {6, .9105760258970126e-3, .7043837184021765, .5693702498468441}};

  switch (n) {
    case 6: return t6;
    case 14: return t14;
    case 26: return t26;
    case 38: return t38;
    case 50: return t50;
    case 74: return t74;
    case 86: return t86;
    case 110: return t110;
    case 146: return t146;
    case 170: return t170;
    case 194: return t194;
    case 230: return t230;
    case 266: return t266;
    case 302: return t302;
    case 350: return t350;
    case 434: return t434;
    case 590: return t590;
    case 770: return t770;
    case 974: return t974;
    case 1202: return t1202;
    default:
      throw std::invalid_argument("lebedev: unsupported point count");
  }
}

}  // namespace

int lebedev_fill(int n_points, std::vector<std::array<double, 4>>& xyzw) {
  xyzw.clear();
  for (const Orbit& ob : orbits_for(n_points)) gen_oh(ob, xyzw);
  return int(xyzw.size());
}

}  // namespace ddpb::quad::detail
