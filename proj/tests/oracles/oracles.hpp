#pragma once
// Generated by gen_oracles.py; do not edit by hand.

#include <array>
#include <string_view>

namespace oracle {

inline constexpr int kDegree = 40;
inline constexpr std::array<long long, 41> k_chi0 = {1, 1, 1, 2, 1, 3, 2, 3, 3, 5, 3, 6, 5, 7, 7, 9, 7, 12, 11, 13, 13, 17, 15, 21, 20, 24, 24, 29, 28, 36, 35, 40, 42, 50, 48, 58, 58, 67, 70, 80, 79};
inline constexpr std::array<long long, 41> k_chi1 = {1, 2, 2, 3, 3, 4, 4, 6, 5, 7, 8, 9, 9, 12, 12, 15, 15, 18, 19, 23, 23, 27, 30, 33, 34, 41, 42, 49, 51, 57, 61, 69, 72, 81, 87, 96, 100, 113, 119, 132, 140};
inline constexpr std::array<long long, 41> k_omega = {1, 2, 3, 4, 6, 8, 10, 14, 18, 22, 29, 36, 44, 56, 68, 82, 101, 122, 146, 176, 210, 248, 296, 350, 410, 484, 566, 660, 772, 896, 1038, 1204, 1391, 1602, 1846, 2120, 2428, 2784, 3182, 3628, 4138};
inline constexpr std::array<long long, 41> k_f = {1, 1, -2, 3, -3, 3, -5, 7, -6, 6, -10, 12, -11, 13, -17, 20, -21, 21, -27, 34, -33, 36, -46, 51, -53, 58, -68, 78, -82, 89, -104, 118, -123, 131, -154, 171, -179, 197, -221, 245, -262};
inline constexpr std::array<long long, 41> k_rho = {1, -1, 0, 1, 0, -1, 1, -1, 0, 1, -1, 0, 2, -1, -1, 1, -1, -1, 2, -1, 0, 2, -1, -1, 2, -2, -1, 3, -2, -1, 3, -2, -1, 3, -2, -1, 4, -3, -1, 4, -2};
inline constexpr std::array<long long, 41> k_xi = {1, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 8, 8, 8, 10, 10, 12, 12, 14, 16, 16, 18, 20, 22, 24, 26, 28, 30, 32, 36, 38, 40, 44, 48, 52, 56, 60, 64, 68};
inline constexpr std::array<long long, 31> k_partitions = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627, 792, 1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604};

struct CValue { std::string_view re; std::string_view im; };

// Mock theta values at q = 0.1 and q = 0.3 + 0.4i (direct sums).
inline constexpr CValue k_chi0_at_0_1 = {"1.1121323353657798324487326721994754454889368493175", "0.0"};
inline constexpr CValue k_chi0_at_c = {"9.7917438856572939923054582779536234022466577937825e-1", "6.0162552474986607302628897485387264143106715587408e-1"};
inline constexpr CValue k_chi1_at_0_1 = {"1.2233446579003367015603685747387107726377131127841", "0.0"};
inline constexpr CValue k_chi1_at_c = {"1.0272807315649541843139113877630929887545943823065", "1.1808359532010547789271206905890709745428778155792"};
inline constexpr CValue k_omega_at_0_1 = {"1.2346916053103734859815648073341205423149117764311", "0.0"};
inline constexpr CValue k_omega_at_c = {"7.9008173634285097048101208299919388333880571401485e-1", "1.248883537537502126128606345195499733242436163863"};
inline constexpr CValue k_f_at_0_1 = {"1.0827256451101480861018621905966871487113075677952", "0.0"};
inline constexpr CValue k_f_at_c = {"1.2251070332089095019135788395235099003519639579529", "1.0743336361234243619421671280934193952986751056621e-1"};
inline constexpr CValue k_rho_at_0_1 = {"9.0099090090189089190189179279279279369378368458569e-1", "0.0"};
inline constexpr CValue k_rho_at_c = {"5.8944416893611198495206185036468574346659972602268e-1", "-3.3560906182364386527738572681059312286019767017727e-1"};
inline constexpr CValue k_xi_at_0_1 = {"1.2222244444668891133578024691360249382716294076321", "0.0"};
inline constexpr CValue k_xi_at_c = {"1.1917711074061170312237483516753611986511779740544", "1.2219004527669627100210251182334043988256839636727"};

// Closed forms at tau = i.
inline constexpr std::string_view k_eta_i = "7.6822542232605665900259417957618064451786691446481e-1";
inline constexpr std::string_view k_theta3_i = "1.0864348112133080145753161215102234570702057072452";
inline constexpr CValue k_eta_generic = {"7.4855684268814890263131051305782446210991930992525e-1", "3.8518376474806323325679229107751232455826847750049e-2"};  // tau = 0.2 + 1.1i
inline constexpr CValue k_theta3_generic = {"1.0510693104817311284400286146000242867608216242289", "3.710635952095270263070525363044252450066834537828e-2"};  // tau = 0.2 + 1.1i

// Integrals by mpmath.quad.
inline constexpr std::string_view k_w3_1 = "1.4399034099605580051237737643772295873137998255015e-1";
inline constexpr std::string_view k_w2_1 = "4.2893898515413929549073964645723313960160952584078e-1";
inline constexpr std::string_view k_l_1_5_at_2 = "8.4191572455552425597477499688954411316051176997042e-1";
inline constexpr std::string_view k_l_2_5_at_2 = "7.3491278287967322938674109479253133699611268368451e-1";
inline constexpr CValue k_w3_c = {"1.2940579613079968688932097681814743784982257826211e-1", "-3.9805164031537485008412004345768518414966326517803e-2"};  // alpha = 1 + 0.5i

}  // namespace oracle
