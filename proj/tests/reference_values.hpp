#pragma once

// Reference decimal strings computed with an independent multiprecision tool
// before the implementation existed, frozen here as test oracles.

namespace refs {

// Euler-Mascheroni constant, 70 digits.
inline constexpr const char* kEulerGamma =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677";

// Classical Stieltjes constants gamma_n = gamma_n(1), 60+ digits.
inline constexpr const char* kGamma1 =
    "-0.072815845483676724860586375874901319137736338334337952599006560";
inline constexpr const char* kGamma2 =
    "-0.0096903631928723184845303860352125293590658061013407498807013655";
inline constexpr const char* kGamma3 =
    "0.0020538344203033458661600465427533842857158044454106182454814833";

// Generalized Stieltjes constants at rational points, 55 digits.
inline constexpr const char* kGamma1Quarter =
    "-5.518076350199403752694011044776655407107944603185743464";
inline constexpr const char* kGamma1ThreeQuarters =
    "-0.3912989024045497742398741921892963714503897319671407663";
inline constexpr const char* kGamma1Fifth =
    "-8.030205511035976887627891346651034853998638695274376811";
inline constexpr const char* kGamma2TwoFifths =
    "2.101723619623312440125406357263085976585699486014113379";
inline constexpr const char* kGamma2Half =
    "0.9688644752202907114217110623237806541825980447604188056";
inline constexpr const char* kGamma3TwoThirds =
    "-0.09730355466473732148668254691035361017675457842452904127";

// gamma_0(1/4) = -psi(1/4).
inline constexpr const char* kGamma0Quarter =
    "4.227453533376265408089530146096683577367244438708242272";
inline constexpr const char* kPsiThird =
    "-3.132033780020806322996419074287268854155428296720418064";
inline constexpr const char* kLogGammaQuarter =
    "1.288022524698077457370610440219717295925377565112860550";

inline constexpr const char* kZeta2 = "1.644934066848226436472415166646025189219";
inline constexpr const char* kZeta3 = "1.202056903159594285399738161511449990765";

// zeta''(0) and zeta''(0, 1/3).
inline constexpr const char* kZetaDD0 =
    "-2.006356455908584851210100026729960438198994910160919881";
inline constexpr const char* kZetaDD0Third =
    "-0.7998574287575355282413548184129661263348483544953667861";
// zeta'(0, 1/2) = -(1/2) log 2.
inline constexpr const char* kZetaD0Half =
    "-0.3465735902799726547086160607290882840377500671801276271";

// Hurwitz zeta spot values.
inline constexpr const char* kHurwitzM15X03 =
    "-0.00818556048583597450249879990550725171435680876";
inline constexpr const char* kHurwitz23X07 =
    "2.83581489757029992363123051472203823332052596";
inline constexpr const char* kHurwitz2p3iX13Re =
    "-8.71229463711354293674531449362939504055371016";
inline constexpr const char* kHurwitz2p3iX13Im =
    "-1.80329307663349323048695439898019725182920600";

}  // namespace refs
