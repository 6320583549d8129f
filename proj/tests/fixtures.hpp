#pragma once

// Frozen reference values for the tests. All entries were computed ahead of
// the implementation with 40-digit arithmetic (mpmath): engineering-constant
// conversions in exact rationals, kernel coefficients from the closed form
// cross-checked against a direct transform-domain solve of the bonded
// two-medium problem, moment integrals by high-precision quadrature, and the
// reversion coefficients by high-precision series inversion.

#include "layerdent/materials.hpp"

namespace fixtures {

// --- transversely isotropic fixture pair -----------------------------------
inline layerdent::EngineeringConstants layer_eng() { return {10.0, 20.0, 0.2, 0.25, 5.0}; }
inline layerdent::EngineeringConstants substrate_eng() { return {5.0, 8.0, 0.3, 0.2, 2.0}; }

// stiffness moduli (exact rationals: 3875/354, 925/354, 200/59, 1280/59, 5)
inline constexpr double layer_A11 = 10.946327683615819209;
inline constexpr double layer_A12 = 2.6129943502824858757;
inline constexpr double layer_A13 = 3.3898305084745762712;
inline constexpr double layer_A33 = 21.694915254237288136;
inline constexpr double layer_A44 = 5.0;

inline constexpr double sub_A11 = 5.7692307692307692308;
inline constexpr double sub_A12 = 1.9230769230769230769;
inline constexpr double sub_A13 = 1.5384615384615384615;
inline constexpr double sub_A33 = 8.6153846153846153846;
inline constexpr double sub_A44 = 2.0;

inline constexpr double layer_gamma1 = 1.6740568168595818475;
inline constexpr double layer_gamma2 = 0.84095849676473520462;
inline constexpr double layer_m1 = 3.0604567764433965614;
inline constexpr double layer_m2 = 0.32674861076199064395;
inline constexpr double layer_H = 0.019388422957138793589;

inline constexpr double sub_gamma1 = 1.7564735646501074027;
inline constexpr double sub_gamma2 = 0.69572364191258744459;
inline constexpr double sub_m1 = 4.4649989945347636352;
inline constexpr double sub_m2 = 0.22396421616757750195;
inline constexpr double sub_H = 0.047565290523634456220;

inline constexpr double theta = 8.2087616637894048329;

// --- kernel coupling coefficients (fixture pair) ----------------------------
inline constexpr double kern_a11 = -0.94255705301770708883;
inline constexpr double kern_a12 = 0.59058576438272146707;
inline constexpr double kern_a21 = -1.1756515079027866918;
inline constexpr double kern_a22 = 0.88155945467453100382;
inline constexpr double kern_Z = -46.977453789834547336;
inline constexpr double kern_g = 0.78538617089392410721;
inline constexpr double kern_Hratio = 1.4588413478759697668;

inline constexpr double L_at_0 = 2.4532831075939043562;
inline constexpr double L_at_05 = 2.0807423828742651137;
inline constexpr double L_at_1 = 1.7367116098801481460;
inline constexpr double L_at_2 = 1.2696784189409054556;
inline constexpr double L_at_5 = 1.0090872204727680042;

// --- asymptotic constants (fixture pair) ------------------------------------
inline constexpr double a0 = -1.7960877108472356828;
inline constexpr double a1 = 0.87127494117888728573;
inline constexpr double a2 = -0.51780035148271313481;
inline constexpr double a3 = 0.32099251815953123034;
inline constexpr double K0 = 1.1434249496317774403;
inline constexpr double K1 = -1.1093417094457620962;

// --- moment-function samples (fixture pair) ---------------------------------
inline constexpr double F_01 = -1.7874264224943265567;      // F(0.1)
inline constexpr double F2_01_02 = -1.7541577682847563603;  // F2(0.1, 0.2)
inline constexpr double S0_01_01 = -1.7705390969571741652;  // S0(0.1, 0.1)
inline constexpr double S2_01_01 = -0.17817800802062146043; // S2(0.1, 0.1)
inline constexpr double S2t_01_01 = -1.1240983249040439073e-3;
inline constexpr double S4_01_01 = -0.59242396312927635995;

// --- power-law fixture: theta=1, h=1, lambda=2, A=0.5, a=0.1 ----------------
inline constexpr double pl_P = 2.6646945036276519785e-3;
inline constexpr double pl_w = 1.0752844810973064441e-2;

// shape factors
inline constexpr double F1_15 = 4.3133048450481319468; // lambda = 1.5
inline constexpr double F2_15 = 1.7972103521033883112;
inline constexpr double F3_15 = 1.6235984724430596851;
inline constexpr double F3_2 = 1.8856180831641267317; // 4 sqrt(2)/3
inline constexpr double F1_3 = 7.0685834705770347865; // 9 pi / 4
inline constexpr double F3_3 = 2.2545033035736532332;

// --- reversion coefficients at lambda=2, a0=1, a1=1 --------------------------
inline constexpr double D1_l2 = -0.21220659078919378103;
inline constexpr double D2_l2 = -0.022515818587186171432;
inline constexpr double D3_l2 = -0.23113170194302143890;
inline constexpr double D4_l2 = -0.049301151535958194757;

// --- hemisphere fixture: alpha=0.3, mu=0.2, theta=1, R=1 ---------------------
inline constexpr double hemi_P = 0.074740795771374432400;
inline constexpr double hemi_w = 0.097110972056221537161;

// closed-form integrals at alpha = 0.5, R = 1
inline constexpr double hemi_I1_05 = 0.54930614433405484570; // atanh(1/2)
inline constexpr double hemi_I2_05 = 0.093316340208784278561;
inline constexpr double hemi_I3_05 = 6.6730390883725622063e-3;
inline constexpr double hemi_rhs_05 = 0.37326536083513711424; // (5/4) ln 3 - 1

// --- isotropic rigid-base kernel d = (1, 0, 1): L(u) = tanh(u) --------------
inline constexpr double tanh_a0 = 0.69314718055994530942;  // ln 2
inline constexpr double tanh_a1 = -0.11269283467121196426; // -(3/32) zeta(3)

} // namespace fixtures
