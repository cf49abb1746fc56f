#ifndef GGF_TESTS_FIXTURES_HPP
#define GGF_TESTS_FIXTURES_HPP

// Frozen reference values, generated by make_fixtures.py (mpmath at 80-digit
// working precision, printed to 25 digits).  Parameters are the exact binary
// doubles the library receives.  Regenerate with
//   python3 tests/make_fixtures.py

namespace fixtures {

// --- log-gamma / pochhammer / 2F1 ---
inline constexpr double kLnFactorial20 = 42.33561646075348502965988;
inline constexpr double kHyp2f1Generic = 0.3195126469889326794201198;
// --- series evaluation ---
inline constexpr double kG_l07_n203_t10 = 0.05630066887429487120565106;
inline constexpr double kG_l16_n203_t10 = 0.01441710434597827623824631;
inline constexpr double kG_l07_n203_t30 = 0.2438699578911403994673663;
inline constexpr double kG_l23_n203_t30 = 0.2156643267020816512479101;
inline constexpr double kG_l31_n203_t305 = -1.575058783239941459718856;
inline constexpr double kG_l05_n501_t30 = 0.2900123552712141740946309;
inline constexpr double kG_l05_n203_t3138 = -0.8059868074477820627853472;
inline constexpr double kG_l15_n501_t3138 = -10.95315330323815977073761;
inline constexpr double kG_l45_n203_t31 = -8399.8184860672724748745;
inline constexpr double kG_l20_n501_t157 = -0.001092007850559042669288055;
inline constexpr double kGegenbauer_n50_l25_x09 = 0.001430730666046719304078316;
// --- derivatives (high-precision numerical differentiation) ---
inline constexpr double kD2G_l12_n55_t11 = -6.627281559957115808782813;
inline constexpr double kD1G_l08_n73_t09 = -0.3730077561458309806490729;
// --- recurrence seeds/targets ---
inline constexpr double kG_l16_n32_x045 = -0.1697288196783826845360657;
inline constexpr double kG_l16_n42_x045 = -0.09197086205440132183623468;
inline constexpr double kG_l16_n52_x045 = 0.03145583009800437299202138;
// --- endpoint coefficients ---
inline constexpr double kQ_l16_n37 = 0.006621460896464022029895256;
inline constexpr double kQ_l23_n203 = -0.000005383627906167120815791441;
// --- asymptotic leading / residual / bounds ---
inline constexpr double kLead_l07_n203_t10 = 0.04962473227178182399139385;
inline constexpr double kRes_l23_n203_t12 = 0.00009163650308994738647459563;
inline constexpr double kRes_l07_n203_t10 = 0.0002684214422366185594491109;
inline constexpr double kS_l31_n203_t10 = 0.001007143212591233872738715;
inline constexpr double kB_l07_n203 = 0.1915580361231709723443755;
inline constexpr double kB_l31_n203_c1 = 9017.156397292469746440866;
// --- contour kernels ---
inline constexpr double kKernG_t10_05_re = 0.1379132065793090166654572;
inline constexpr double kKernG_t10_05_im = 0.8769731597851905503464866;
inline constexpr double kKernF_l23_t10_07_re = 0.2656598112792969958876215;
inline constexpr double kKernF_l23_t10_07_im = 0.2635771940905383511699335;
inline constexpr double kFBound_l31_t08_05 = 15.57952881365572041317621;
// --- weighted pair (case i: weight sin(theta)) ---
inline constexpr double kWR_l07_n203_t15 = -0.00003709141345699552340870919;
// --- Szego-form leading for integer degree ---
inline constexpr double kSzego_n200_l08_t157 = 0.06930586133719654622393353;
inline constexpr double kSzego_n100_l08_t05 = 0.04242173844972907823570497;
// --- quadrature calibration ---
inline constexpr double kBeta13_06 = 1.389638059635963180692182;
inline constexpr double kGamma17_rate21 = 0.005135922298339566835422743;
// --- fractional-integral identity, lambda=0.4 nu=2.7 s=0.5 x=0.3 ---
inline constexpr double kFci_rhs_l04_n27_s05_x03 = -0.2317867023705969163620582;
inline constexpr double kFci_lhs_l04_n27_s05_x03 = -0.2317867023705969163620582;
// --- envelope constants (max-norm bounds) ---
inline constexpr double kRhoEnv_l03_n203 = 0.3262616722703698758603967;
inline constexpr double kKappaEnv_l25_n203 = 0.002581636935899125119614727;
// --- 50-digit decimal strings for the oracle cross-check ---
inline constexpr const char* kOracleStr_l07_n203_t10 = "0.056300668874294871205651060282145206210875373248012";
inline constexpr const char* kOracleStr_l23_n203_t30 = "0.21566432670208165124791009941469934983635109863266";

}  // namespace fixtures

#endif  // GGF_TESTS_FIXTURES_HPP
