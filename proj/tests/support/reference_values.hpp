#pragma once

// High-precision values computed independently (40-digit arithmetic).
namespace hyperlap::testing::ref {

// hyperstar f_r roots
inline constexpr double kHyperstarK3D2F1 = 0.2451223337533072399504911036414713081054;
inline constexpr double kHyperstarK4D2Max = 2.543689012692076361570855971801747986525;
inline constexpr double kHyperstarK4D3Max = 3.25992104989487316476721060727822835057;

// largest root of the sunflower function
inline constexpr double kSunflowerK4 = 2.9390816491253518949871137059466949364;
inline constexpr double kSunflowerK6 = 2.916654964443351369697458443219266030377;
inline constexpr double kSunflowerK8 = 2.921282260468741212471496656364434909908;

// hyperpath(3, 3)
inline constexpr double kPath3Case2 = 0.2451223337533072399504911036414713081054;
inline constexpr double kPath3Case3 = 0.5344287681232319733432687747800608919744;
inline constexpr double kPath3Case4Low = 0.116796494086474135831052534637944909439;
inline constexpr double kPath3Case4High = 1.468989943540430815367258741152357011991;
inline constexpr double kPath3Symmetric = 0.4119782018077458508971060367298246983456;

// hypercycle(3, 3), case (iii) equations
inline constexpr double kCycle3Case3Stated = 0.1106298384421419937759408840139063153101;
inline constexpr double kCycle3Case3Corrected = 0.3043792304401379425836328998824646573818;

// largest signless eigenvalue of hyperstar(k, d), k = 3..8
inline constexpr double kHyperstarQ_D2[] = {2.6956207695598620574, 2.5436890126920763616, 2.4510850920547193208,
                                            2.3880935088896735764, 2.3421522165861573294, 2.3069899769252657161};
inline constexpr double kHyperstarQ_D3[] = {3.4855839976886002064, 3.2599210498948731648, 3.1424023381409785184,
                                            3.0775172056154792459, 3.0414469572981987414, 3.0217299739238618763};

}  // namespace hyperlap::testing::ref
