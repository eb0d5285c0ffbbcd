// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by make_stats_reference.py with SciPy 1.15.3. Do not edit.

#ifndef AGORA_TESTS_ORACLES_STATS_REFERENCE_HPP_
#define AGORA_TESTS_ORACLES_STATS_REFERENCE_HPP_

#include <vector>

namespace oracle {

struct MwuCase {
  std::vector<double> a;
  std::vector<double> b;
  double u;
  double p;
  bool exact;
};

struct WilcoxonCase {
  std::vector<double> pre;
  std::vector<double> post;
  double w;
  double p;
  bool exact;
};

inline const std::vector<MwuCase> kMwuCases = {
    {{1.0, 2.0, 0.0, 1.0, 2.0, -1.0, -2.0, -1.0, -1.0, 2.0, 2.0, -2.0, 0.0}, {2.0, -2.0, 1.0, -2.0, 0.0, 2.0, -1.0, -1.0, -1.0}, 68.5, 0.5151977955527696, false},
    {{-0.930468, -0.029252, 0.695303, -1.344215, -0.457616, -1.901223, -1.289538, -1.841735, -0.235091, -1.267446}, {0.571264, 0.456751, 0.11306899999999998, -2.2167600000000003, -0.238693}, 16.0, 0.3096903096903097, true},
    {{0.113309, -1.530136, -0.477753, -0.978519, -0.808837, 1.060899, -0.807535, -0.032522, 0.88439, -0.5836, -0.111702, 0.110464}, {0.363782, -0.9250559999999999, 0.37614, 1.658823, -1.247145, 1.159383, 0.419354, -0.34147, 2.300417}, 33.0, 0.14515183740205176, false},
    {{-2.0, -2.0, 1.0, -1.0, 0.0, -1.0, -1.0, -2.0, -1.0, 2.0}, {0.0, -1.0, 0.0, 2.0, -1.0, 0.0, 0.0, 1.0, 0.0}, 24.5, 0.09096894797535775, false},
    {{0.127268, -1.187195, -0.579302, -0.196196, 0.898764, 1.145222, -1.323528, -0.794642, 0.646903, -1.99242}, {-0.16317000000000004, 0.20271299999999998, 1.557015, 0.989404, -0.027212999999999987, -0.06857600000000003, 0.04980499999999999, 1.823529, -0.128025}, 24.0, 0.09471952196410402, true},
    {{0.352589, -0.12077, -0.197284, -1.114067, -0.011521, -0.443581, 1.166128, 0.653089, -0.024144, 0.668381}, {-0.03987000000000002, 1.352126, 0.2946, 0.8833819999999999, -0.990893}, 20.0, 0.594072594072594, true},
    {{-2.0, 2.0, -2.0, 0.0, 2.0, -2.0, 1.0, 1.0, 0.0}, {-2.0, 0.0, 0.0, 2.0, 1.0, -1.0, -2.0, 0.0, -1.0, 1.0, 2.0}, 50.0, 1.0, false},
    {{-0.20593, 0.702463, 0.519908, -1.033676, -0.079181, 0.035287}, {-0.7544849999999999, 0.559839, -0.5579560000000001, 1.272067, 0.492746, 0.389306, -0.291028, 0.18139, -1.697746, -0.831407, 0.66284, -1.8285669999999998}, 40.0, 0.7502693385046326, true},
    {{-1.746096, 0.756739, -0.845497, 0.778991, 0.130951, -1.536835, 1.249149, 1.441707}, {0.234195, 0.026083999999999996, 0.14013299999999998, -0.675152}, 18.0, 0.8080808080808081, true},
    {{0.0, 2.0, 0.0, 2.0}, {2.0, -1.0, 0.0, 1.0, 2.0, -2.0, -2.0, -1.0, 0.0}, 26.0, 0.23251030687189156, false},
    {{0.965922, 0.013325, -0.694404, -0.326685}, {-0.26023100000000005, 0.307959, -0.07526700000000003, 7.799999999996698e-05, -1.078575, -0.5068459999999999, 1.954058, -0.371233}, 17.0, 0.9333333333333333, true},
    {{0.337326, 1.407272, -1.454024, -0.208522, -0.632053, -1.761019, 0.734927, -0.023444, 0.071442, -0.752311, 0.454784}, {-0.23929700000000004, 0.157097, -0.8082609999999999, -0.9161029999999999, 1.635532, -0.20710500000000004, 0.59168, 0.26621, -0.14114500000000002, -0.207961, 0.930083, -0.0018680000000000363}, 59.0, 0.6891216451070523, false},
    {{-1.0, -1.0, 1.0, -1.0, 2.0, -2.0, 2.0}, {0.0, -1.0, -2.0}, 14.0, 0.47765973512758664, false},
    {{0.94953, 0.966447, -0.140708, 0.541884, 0.781443, 0.831184}, {1.2213829999999999, -0.15561800000000003, 1.814973, -0.946593, 1.161723, 0.793932, 1.173619, 2.179008, 1.784445}, 15.0, 0.181018981018981, true},
    {{-1.688672, 0.816889, -1.015012}, {0.287595, 1.139727, -1.343797}, 3.0, 0.7, true},
    {{0.0, 1.0, -1.0, -2.0, 2.0, 1.0, 1.0, 2.0, 0.0, -2.0}, {0.0, 0.0, -1.0, 1.0, -1.0, 1.0, 1.0, -2.0, 0.0, 1.0, -2.0, 1.0}, 68.5, 0.5849469365205358, false},
    {{-0.989295, -0.658059, -0.999043, -0.886642, 0.195408, -0.782975, 0.356066, 0.339756, 2.025161, -1.392789, 0.887902, -0.089488, -0.01403}, {-1.149864, -0.160194, 1.043197, 0.217522, 0.381054, 0.009282999999999986, 1.4545700000000001, 0.27852699999999997, -1.900416, -0.39207300000000006, -1.6687969999999999, -2.951438}, 82.0, 0.8490153628243157, false},
    {{1.33356, 0.04712, -1.172546, -0.9407, 1.130613, 0.157627, 0.047999, -0.053462, 0.0384, 0.805406, 0.552567, 0.215705}, {-0.7428679999999999, 0.8111090000000001, -0.38424700000000006, 1.3938460000000001, -0.9710509999999999, 0.162379, 0.292642, -1.024646}, 53.0, 0.7344923394458999, true},
    {{1.0, 1.0, -2.0, 1.0, 0.0, 2.0, 2.0}, {1.0, -1.0, -1.0, 1.0}, 19.0, 0.3700277116622618, false},
    {{0.083217, -1.076875, -0.269347}, {0.12174099999999999, 1.488094, 0.634427, 0.294445, 1.82897}, 0.0, 0.03571428571428571, true},
    {{-0.38943, -1.816755, 1.569106, 0.964332, 0.916848, 0.668898, 0.110149, 0.215489}, {0.04799300000000001, 0.09639999999999999, 0.354304}, 16.0, 0.496969696969697, true},
    {{1.0, -1.0, 0.0, -2.0, -1.0, -1.0, 0.0, 0.0, -2.0, -1.0, 2.0}, {0.0, 0.0, -2.0, -1.0, 2.0, 0.0}, 28.0, 0.638446831604703, false},
    {{-0.066862, 0.873658, -0.392537}, {0.07275699999999999, 0.07896599999999998, 0.409594, -1.293011, 0.06460199999999999, -0.5543960000000001, 1.184585, -0.47059900000000005, 0.8770469999999999, 1.824437}, 13.0, 0.8111888111888111, true},
    {{0.602867, -0.601576, 0.191432, -0.002029}, {-0.693616, 0.760919, 2.3155159999999997, 0.04188799999999998}, 6.0, 0.6857142857142857, true},
    {{-1.0, 0.0, -2.0, -2.0}, {-2.0, -1.0, -1.0}, 6.0, 1.0, false},
    {{-0.905453, 1.081358, 1.524358, 0.259326, 0.553391, 1.952251}, {0.103272, -0.29300600000000004, -1.053231, 0.341707, 1.779144, 1.259595, -0.642091}, 28.0, 0.36596736596736595, true},
    {{-0.504171, 0.292268, -0.205311, 0.214454, 0.296739, -0.298774, -0.040174, 0.206592, -0.08397, 0.503521}, {2.170876, 0.891972, 0.355811, -1.3861189999999999, 0.6879569999999999, -1.6466779999999999, -1.1090339999999999, 1.154639, 1.006235}, 31.0, 0.2775119617224881, true},
    {{0.0, 0.0, 0.0, 0.0, 2.0, 1.0, -2.0, 1.0}, {-1.0, -1.0, 0.0, 2.0, -2.0, 0.0, -1.0, 2.0, 0.0, 2.0, 2.0}, 45.5, 0.9316950093078437, false},
    {{-1.151519, 0.116355, -1.150914, 1.112107}, {1.362651, 1.384751, -0.17405000000000004, 0.814521, 0.16793, -0.088812, -0.039146000000000014, -0.9997149999999999, -1.143864, 1.094315, 0.108765}, 15.0, 0.4117216117216117, true},
    {{1.00171, -1.733132, -0.78413, 0.175335, 0.392095, -0.377074}, {1.329179, 0.5103949999999999, -0.9133819999999999, -0.6307640000000001, 1.105471, 0.7638309999999999, -1.599061, 1.647712}, 16.0, 0.344988344988345, true},
    {{0.0, -1.0, -2.0, 0.0, 0.0, 1.0, -2.0}, {-2.0, 1.0, 1.0, 1.0, -2.0, 1.0, 2.0, 1.0, 0.0, 0.0}, 19.5, 0.1270385799303499, false},
    {{-0.382867, 0.983755, -1.251744, 1.072228, 0.337238, -1.043951, -0.501597}, {-0.15906599999999999, 0.250481, -0.23614399999999997}, 9.0, 0.8333333333333333, true},
    {{-0.304588, -1.02689, -1.289527, -0.048176, 0.882874, -1.529372, 0.003508, -0.649956, -0.977145, 0.853438}, {-0.21817000000000003, 1.798302, -0.47983899999999996, 0.686502, 0.07271699999999998, -0.454022, 0.887675, 0.14501699999999998, 0.903211, 0.252708, -0.7858159999999998}, 28.0, 0.06203104181536411, false},
    {{1.0, 2.0, 0.0}, {-2.0, -1.0, -2.0}, 9.0, 0.07652250047505922, false},
    {{-1.721879, 0.651493, -1.081483, -1.80636, -0.059217, 1.105685, -1.524447, -1.088036, -0.743275, -1.129497, 0.379428, -0.807367}, {-0.42151500000000003, 0.883305, -0.45551500000000006, 0.73278, -0.6713850000000001, -0.912139, -1.535449, 2.161203, -0.020259000000000027, 0.543933, 0.26894999999999997}, 38.0, 0.09054915588749132, false},
    {{0.049686, 1.908217, -1.038927, -1.557462, -1.01196, -1.334709, 0.746962}, {1.120378, -0.661316, -1.090436, -0.054796999999999985, 1.691124, -2.519569}, 20.0, 0.9452214452214451, true},
    {{0.0, -1.0, -1.0, 0.0, -1.0}, {0.0, 1.0, 2.0, 1.0, 0.0, -2.0, -2.0, 1.0, 0.0, 2.0}, 13.0, 0.14768140840976765, false},
    {{-0.401668, -0.870172, -1.893807, -0.393657, -0.030903, -0.084054, -0.093792, -1.12181}, {0.233726, 0.261327, 1.590562, 2.166733, 0.163011, -0.46630600000000005, 0.235018}, 5.0, 0.005905205905205905, true},
    {{-0.742434, -0.05865, -1.043304, 0.606107, -0.103916, 0.250008, -0.18294}, {-0.42725399999999997, -0.6479600000000001, 0.062724}, 12.0, 0.8333333333333333, true},
    {{2.0, 1.0, -1.0, 1.0, -2.0, -1.0, -1.0, -1.0, 2.0}, {0.0, -2.0, 0.0, -2.0, -2.0, -1.0, 0.0, -1.0, 1.0}, 52.5, 0.29601829371454, false},
    {{-0.158024, -0.424317, -0.373604, -0.976539, -0.2697, -0.552612, 0.091685, -1.204136}, {0.53559, 0.44321900000000003, 0.158437, -0.13920500000000002}, 1.0, 0.00808080808080808, true},
    {{-1.664602, 0.460453, 0.243037, 0.283376, 0.383313, -0.653644, -0.25946, 0.637058}, {0.730639, 0.506713, -1.21432, 0.837887, 1.469471}, 8.0, 0.09324009324009325, true},
    {{-2.0, 2.0, -2.0, -2.0}, {-1.0, -1.0, -1.0, -2.0, 2.0, 2.0, 1.0, 2.0, 2.0, 2.0, -1.0, 1.0, 1.0}, 12.0, 0.11250711615224268, false},
    {{-0.370845, 0.270992, 1.747968, 1.59403, -0.103353, -0.241521, -1.260871, -0.694458, 0.425358, 0.395731}, {0.410238, 1.294802, -0.47236800000000007, 0.243923, 1.031243, 0.8841460000000001, 1.370946, 0.69702, -0.009402999999999995, 0.662192, -0.7025949999999999}, 42.0, 0.3787382518865303, false},
    {{0.580672, -0.05514, 0.30841, -1.697684, -0.365114, -0.599857, -0.864212, -2.255015, -0.334873, 0.897304}, {0.680998, -0.300947, 0.285124, 1.0568, -2.460418, 0.17546299999999998, 0.8432}, 22.0, 0.2295351707116413, true},
    {{0.0, -2.0, 2.0, 0.0, -2.0, -2.0, -1.0, 1.0, 1.0, 2.0, 1.0, 2.0}, {-1.0, 0.0, 1.0, -1.0, 0.0, 1.0, 2.0, 2.0, -1.0}, 51.5, 0.8845667002582147, false},
    {{0.19848, 1.343204, -0.030313, 1.469359, -0.966657, -0.186036, -0.198165, 0.786506, 1.04526, -1.509444}, {-0.615118, 0.636852, -0.358694, -1.2224279999999998, 1.3384800000000001, 0.7939700000000001, 0.793177, -0.175446, 1.328938, 0.06003999999999998, 1.396435}, 51.0, 0.8053241706182483, false},
    {{-0.854135, 0.204663, -0.702332, 0.675451, 0.260088, -0.922971, 0.072866, -0.351278, 0.915833, -0.632553}, {-0.139173, 1.511237, 2.5385929999999997}, 5.0, 0.1118881118881119, true},
    {{-2.0, -2.0, 0.0, 0.0, -1.0, -1.0, 0.0, 1.0, 1.0, -2.0, -1.0, -1.0, -1.0}, {2.0, 0.0, 0.0, 2.0, 0.0, 1.0, 2.0, 2.0, -1.0, 0.0, -2.0, 1.0}, 35.0, 0.0179116215781005, false},
    {{0.619141, -0.334903, 0.498716, -0.89006, -0.361714, -1.024416, 1.131767}, {0.27291699999999997, -0.43930700000000006, -0.05237200000000003}, 11.0, 0.9999999999999999, true},
};

inline const std::vector<WilcoxonCase> kWilcoxonCases = {
    {{2.0, 0.0, 0.0, -2.0, 0.0, 0.0, 1.0, 0.0, -2.0}, {0.0, 0.0, 1.0, 0.0, 2.0, 0.0, -1.0, 2.0, -2.0}, 8.0, 0.5785147215079439, false},
    {{-0.233744, -0.366413, 1.211944, 0.494175, 0.671333, -0.508222, 1.924203, 1.709591, 0.565948, 0.68429, -2.027261, 0.63771, -0.194109, 0.433906, 0.682459, -0.341292, -1.690482, 0.367875, -0.741384, -0.330194, -0.60451, -0.341574}, {-2.243265, 1.150534, 1.76529, 1.905574, 2.951175, -0.185629, 0.421767, 1.115704, -0.340956, 0.482415, -1.647613, -1.064477, 0.448366, -0.776451, 1.279824, -0.150783, -1.704113, 0.594832, -0.981162, -0.642665, -1.987266, -0.071201}, 122.0, 0.8838460571465129, false},
    {{1.845534, 1.980495, 1.321818, 0.705802, -0.67648, 1.442751, -0.056128, -0.068876, -0.291227, 0.091962, -0.435215, -0.083782, -1.084599, -0.373664, 2.280556, -0.069594, -0.238661, 0.532374, 0.708122, -1.113769}, {1.938375, 3.198771, 1.891656, 1.127756, 1.177538, 1.064978, 0.326618, -0.288935, 1.499081, -1.559898, -0.805357, -0.312939, -0.121059, 0.532611, 3.97575, -1.343627, 0.811814, 0.539094, 0.342497, -0.2742}, 58.0, 0.082550048828125, true},
    {{1.0, 1.0, 2.0, 1.0, -2.0, 2.0, 2.0, -1.0, 0.0, 1.0, 1.0, 1.0, 2.0, -2.0, 2.0, 0.0, -1.0, -1.0, 0.0, -1.0, 2.0, 0.0}, {2.0, 2.0, 1.0, 1.0, 0.0, 2.0, 2.0, 0.0, -1.0, 0.0, 2.0, -1.0, 2.0, -2.0, 2.0, -1.0, -2.0, -2.0, 0.0, 0.0, 0.0, -2.0}, 43.5, 0.32517948009832787, false},
    {{0.038019, 1.236202, 0.424983, 0.392068, 0.409867, -1.456638, -0.164636}, {0.078703, 1.743749, -0.633711, 2.326183, 0.814256, -2.367956, -1.573523}, 13.0, 0.9375, true},
    {{-0.089675, -0.718292, 0.092114, -0.641176, 0.551658, -0.724542, -0.0385, 0.978839, 2.571669, -1.007643, -0.464508, -0.839836, 0.784328, -1.148099, -0.484357, -0.029601, -0.978679, -0.957325, -0.475623, -2.10044, -1.445478, -0.413034, 0.148231, -0.18576, -1.773969}, {-0.253461, 0.380146, 0.94798, -0.419924, -0.035712, 0.206674, -0.317429, 0.109591, 2.069483, 0.740702, 0.055672, 0.619411, 0.604992, 0.09005, -0.785861, 0.112972, 1.807671, 0.109824, -0.676793, -1.885259, -0.819255, 1.097424, -0.040902, -1.627079, -1.753611}, 98.0, 0.08265302326825262, false},
    {{-2.0, -2.0, 1.0, 1.0, -1.0, -2.0, -1.0, -2.0, 1.0, 2.0, 0.0, -1.0, 0.0, -1.0, -2.0, -2.0, 1.0, 1.0, 0.0}, {-1.0, -2.0, 1.0, 2.0, 0.0, -2.0, -2.0, 0.0, 0.0, 1.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 2.0, 2.0, 0.0}, 16.5, 0.018071358770490875, false},
    {{-0.132092, -1.141594, -0.021114, 0.877152, -0.967018, -0.241092, 0.66478, -1.069865, 0.182638, -1.06013}, {1.302539, 1.471227, 2.301141, 0.957971, 0.073181, 0.179906, 1.066886, 0.777892, -0.836542, 0.295165}, 4.0, 0.013671875, true},
    {{-0.048976, 1.408541, 0.187233, -0.672672, 0.27714, 0.735967}, {0.286788, 2.196579, -0.034442, -2.506556, 1.477164, 1.735127}, 7.0, 0.5625, true},
    {{0.0, -2.0, 0.0, 1.0, 0.0, 2.0, 2.0, -1.0, 2.0, -1.0, -2.0, 1.0, -2.0, -1.0, 0.0, 1.0, 2.0, 2.0, 1.0}, {2.0, -1.0, 2.0, 1.0, -2.0, 1.0, 2.0, 1.0, 2.0, -2.0, -2.0, 2.0, 0.0, -2.0, -1.0, 1.0, 2.0, 2.0, 0.0}, 30.0, 0.46685427082272546, false},
    {{0.406321, 0.714085, -0.644626, 0.355036, -0.031878, -0.536024, -0.492148, 0.067034, 0.029853, -0.56549, -0.425945, 1.113337, 0.213827, 0.885094, 1.201822, 0.588842}, {2.977207, 0.188781, 0.463784, 0.336892, 2.123905, 1.464416, -2.146359, -0.601832, 0.994166, 0.524377, 0.610619, 1.342472, 0.968948, 1.838115, 1.423951, 1.916144}, 23.0, 0.01824951171875, true},
    {{0.633794, -1.034053, 0.958678, -0.228684, -0.888787, 0.373902, -0.911333}, {0.021026, -2.301347, 1.23197, 0.56814, 0.434239, 0.532174, 0.436522}, 8.0, 0.375, true},
    {{0.0, -2.0, -1.0, -2.0, -2.0, 2.0, 2.0}, {2.0, -1.0, -2.0, 0.0, -2.0, 1.0, 1.0}, 7.5, 0.5164122683960384, false},
    {{-0.900408, 1.028006, -0.40041, 0.462443, -0.825473, 0.358804, 0.391593, -0.420681, 2.020889, 0.37104, 1.776929, 0.959139, -0.662275, -0.382187, 0.436102, 0.061173, 0.049461, -0.286205, -1.808476, -0.225433}, {-2.818529, 1.699826, -0.826468, 0.047026, -0.744777, 0.931476, -0.740413, -1.869282, 1.254823, -1.370688, 1.110079, 2.850022, -1.418861, 0.569218, -0.635533, 0.660293, 0.029727, -0.046018, -0.939698, 1.830807}, 90.0, 0.5958194732666016, true},
    {{0.194706, 0.124359, -0.973368, 0.58334, -0.246072, 0.832007, -0.043706, 1.740856}, {-1.488211, 0.12776, 0.208114, 0.532648, -0.738245, 0.866126, -1.123635, 2.15981}, 14.0, 0.640625, true},
    {{2.0, 1.0, 0.0, -2.0, 0.0, 2.0, -1.0, 2.0, 2.0, 2.0, -1.0, 1.0, 1.0}, {2.0, 1.0, 1.0, 0.0, 2.0, 2.0, -2.0, 0.0, 0.0, 2.0, -1.0, 2.0, 1.0}, 13.0, 0.8623197383894363, false},
    {{-2.230529, 0.74982, -0.630031, 0.481294, 1.868325, 1.172996, -1.151135}, {-1.06128, 2.207677, -1.076388, -0.172003, 2.058633, -0.128427, 0.6196}, 10.0, 0.578125, true},
    {{-1.106807, -0.269565, -0.227087, 0.166124, 0.271449, -0.213612, 1.136886, -2.139376, -0.000165, -0.714584, 0.132513, 0.22076, -0.911829, -0.640949}, {-0.01422, 0.379491, -0.607335, 2.506015, 2.880627, -1.376074, 1.738681, 0.669618, 1.083734, -0.193524, 0.224456, -0.020434, -0.824344, -0.891678}, 23.0, 0.067626953125, true},
    {{2.0, -2.0, -1.0, -1.0, 2.0, -1.0, 1.0, 0.0}, {2.0, -1.0, -2.0, 1.0, 2.0, -2.0, 1.0, -2.0}, 6.5, 0.7825279247400674, false},
    {{0.504725, 0.356091, 0.059176, -0.127328, -0.307806, 0.759117, -1.08424, 1.340723, 0.034078, -0.7487, -0.489146, -0.67699, 0.160206, -0.717843}, {1.946856, -0.125548, -1.913346, -0.558326, -2.016327, 1.019248, 0.274918, 2.288483, -1.003512, -1.210955, 1.589488, -0.058479, 0.464325, 0.63822}, 45.0, 0.6697998046875, true},
    {{2.452741, 1.296573, 0.139415, 0.354688, 0.61708, -0.612698, -1.058719, 0.052449, -0.947211, -0.061462, 0.096123, 2.341037, -0.85105}, {2.630952, 1.43227, 0.876726, 1.701412, 0.426596, -1.13405, -2.39943, -0.573755, -0.11077, 0.284185, -0.619311, 2.26827, -0.519577}, 41.0, 0.786865234375, true},
    {{0.0, 0.0, -1.0, -2.0, 2.0, -2.0, -2.0, -2.0, -1.0, 1.0, -2.0, -2.0, 1.0, -2.0, -1.0, 2.0, 2.0, 0.0, 2.0, 2.0, 2.0, -1.0, -1.0, 1.0}, {-2.0, -1.0, -2.0, 0.0, 2.0, -2.0, -1.0, -2.0, -2.0, 0.0, -1.0, -1.0, 2.0, -1.0, 1.0, 2.0, 2.0, 1.0, 2.0, 2.0, 2.0, 1.0, -2.0, 2.0}, 47.0, 0.2526473212237249, false},
    {{1.389768, -0.145683, -0.174132, 0.825051, -1.366524, 0.209429, -0.530559}, {1.320979, -1.587197, -0.764676, 1.104557, -0.178071, 1.499456, -0.310885}, 12.0, 0.8125, true},
    {{-0.830679, 0.402356, -0.247578, 0.605885, 1.751687, -0.032375, -1.497354, -0.86085, -1.458147, -1.19711, 1.305271, 0.22666, -1.520174, 0.653632, 1.260375, -0.359875, -0.675991, -0.337378, 0.284607, 0.63997, 1.182217}, {0.681799, 1.88776, 1.414343, 1.567273, 0.52078, 0.136661, -0.883433, -0.943976, -0.246886, -1.257324, 0.679524, 1.970959, -0.55417, 1.172886, 2.487084, 1.002659, -0.034955, -2.495039, -0.090982, 0.483391, 0.498016}, 65.0, 0.0792146188362769, false},
    {{2.0, -2.0, 0.0, 0.0, 0.0, -1.0, 1.0, 2.0, 0.0, 2.0, -2.0, -1.0, 2.0, 1.0, -2.0, 2.0, 2.0, -1.0, -2.0, 0.0, 0.0, 0.0, 1.0}, {2.0, -1.0, 2.0, 1.0, -2.0, -2.0, 2.0, 2.0, 1.0, 1.0, -1.0, -2.0, 2.0, 0.0, 0.0, 2.0, 1.0, 0.0, -1.0, -1.0, -1.0, -1.0, 1.0}, 81.0, 0.8332316252704, false},
    {{0.893991, 1.267016, 0.328652, -0.600396, -0.537646, 0.509653, 0.5809, 1.398051, 0.41843, 1.060168, 1.516771}, {1.358792, 0.081457, -0.550625, -1.738199, 1.353944, -0.037756, 2.112742, 2.283783, 2.433699, 2.363262, 1.714401}, 20.0, 0.2783203125, true},
    {{-0.20003, 0.085168, 0.175261, -0.530744, -0.032628, 1.60932, -1.702138, 0.258488, -0.906953, 0.187037, 0.839856, -0.05761, 0.772987, -1.589839, 1.106989, -0.603129, 0.622408, 0.182448, -2.585562}, {-0.656094, 0.605676, 2.029237, 0.056524, 0.525068, 0.496636, 0.029009, 2.365565, -0.578378, 0.26728, -0.479194, 1.125711, 3.775266, -0.572726, 2.670693, 0.238958, -0.062608, 1.819121, -3.520137}, 43.0, 0.036067962646484375, true},
    {{1.0, 1.0, -2.0, -1.0, 0.0, -1.0, 0.0, -1.0, -1.0, 0.0, 2.0, -1.0, 1.0, 2.0, -2.0, 2.0, -1.0, -2.0, 2.0, -2.0, 2.0}, {0.0, 2.0, -2.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, -2.0, 2.0, 1.0, -1.0, 2.0, -2.0, 0.0, 2.0, -2.0, 1.0}, 42.0, 0.08433317664986015, false},
    {{-0.326998, 1.70917, -0.338406, -1.156195, -1.31694, 0.335694, 0.305242, -1.371702, -0.985396, 0.534713, 0.577267, -0.643222, 0.622216}, {0.544857, 0.226088, -0.35047, -0.441069, -1.590016, -1.503238, 0.322227, -0.319609, 0.89501, -1.35607, 3.490588, -1.470358, 1.879187}, 40.0, 0.7353515625, true},
    {{0.983017, 0.149618, -1.161418, 0.626559, -0.715233, -2.522695, 2.828899, 0.708102, 1.818077, -0.911623, 1.467503, 1.589869, 1.55455, -0.021206, -1.202462, -0.177313}, {-0.919752, -1.252394, -0.769479, -0.064839, -0.57968, -2.331695, 5.059626, 2.305729, 2.073204, 0.597277, 0.98779, 1.552972, 2.764774, -0.962867, -1.181443, -1.198159}, 63.0, 0.820892333984375, true},
    {{-1.0, -2.0, -2.0, 2.0, 2.0, 2.0, 0.0, 1.0, 1.0, 0.0, 2.0}, {-2.0, -2.0, -2.0, 2.0, 0.0, 2.0, -1.0, 2.0, 1.0, -2.0, 2.0}, 2.0, 0.12897804299196425, false},
    {{1.62941, 0.704892, -0.334324, 0.801398, 0.290994, 0.279704, 0.607276, -0.579494, -0.404368, -1.721246, -0.441869, -1.422333, -0.144681, -0.957631, 0.101234, 0.453239, -1.420123}, {1.116131, 0.06158, 0.712169, 2.80776, 1.442531, 0.230285, 2.372282, -1.793602, 1.39499, -2.07746, -2.922162, 1.528472, 1.733342, -1.689515, 0.570243, 0.53874, -1.017902}, 52.0, 0.2633209228515625, true},
    {{-1.483286, -0.681494, 0.467961, 0.222696, 1.199239, 0.07975, 2.349222, -0.715732, 0.259332, -1.916318, -1.253133, 1.328526, -0.942803, 0.530675, -0.061771, -1.044549}, {-1.531535, -0.895728, 0.280595, 1.276304, 2.151584, -0.197676, 1.742119, -0.133395, 0.459317, -0.588036, 1.702161, 2.47145, -0.677533, 0.658631, -0.618465, -1.651222}, 45.0, 0.252227783203125, true},
    {{-1.0, -2.0, 1.0, 0.0, 1.0, 0.0, -2.0, 2.0, 0.0, -1.0, 1.0, -1.0, 1.0, 0.0, 0.0, -2.0, -2.0}, {1.0, 0.0, 1.0, 0.0, -1.0, 1.0, -1.0, 2.0, -1.0, -2.0, 2.0, -2.0, 2.0, -2.0, 1.0, -2.0, -1.0}, 38.0, 0.5848818802401624, false},
    {{0.421128, 0.765212, 1.279634, -0.670295, 0.417412, -0.888005, -0.691247, -0.631563, -0.146268, 0.149776}, {1.184161, -0.385697, 3.606409, 0.813234, 1.460975, -0.954535, -0.482554, 0.229603, 0.575172, -1.271286}, 16.0, 0.275390625, true},
    {{2.988248, -1.89329, 1.019678, 0.378502, -0.114415, 1.407016, -1.213596, 0.167095, 1.501955, -0.202099, -0.429263, 0.117977, -0.456755, 1.589169, -0.931848, 0.896931, -1.286684, 0.687572, -0.107799, -2.655162, -0.006143, -1.096784, -0.456782, 1.581552, -1.148581}, {2.198298, -0.112407, 1.438875, 2.263233, 0.518192, 0.799951, -0.981763, 1.731223, 2.76946, 0.098813, -0.079119, 0.302277, -0.751422, 3.875049, -0.624455, 0.034022, -1.477102, 1.734392, 0.85176, -2.496161, -0.3934, -0.772202, -1.87747, 0.543109, -0.027181}, 97.0, 0.07800127936744676, false},
    {{-2.0, 1.0, 1.0, 0.0, 0.0, 0.0, -1.0, 1.0, -1.0, 1.0, 0.0, 2.0, 2.0, 2.0, -1.0, 1.0, 1.0, 1.0, 2.0, -2.0, 1.0}, {-1.0, 0.0, 0.0, 0.0, -1.0, 0.0, -2.0, 0.0, -2.0, 2.0, -2.0, 1.0, 2.0, 2.0, 0.0, 2.0, 2.0, 0.0, 0.0, -2.0, 2.0}, 45.0, 0.19642340189769103, false},
    {{0.650227, -1.249671, -0.230041, 1.341659, -0.711757, -0.525002, 1.103353, -0.394713}, {0.644971, -0.722312, 1.148378, -0.622967, -1.262928, -1.259915, 0.28894, -0.972496}, 9.0, 0.25, true},
    {{-0.861548, 0.309216, -0.912128, 0.125584, 0.411421, -0.748053, 0.133876, 1.677519, 0.330054, -0.652979, -0.066521, -0.937942, 0.277136, 0.882449, -0.837944, -0.213944, 1.137296, -0.508486, 0.192103, -1.046131, -0.836786, -0.523463}, {1.614772, 0.200166, -1.142087, -0.13761, 0.545819, 0.207877, 0.623366, 4.035334, 0.843848, 1.094425, 0.51019, -0.032361, -0.866464, 1.05539, -0.606892, -0.156901, -0.715583, 0.672138, 0.104953, -1.184202, -0.791957, -0.451542}, 73.0, 0.08240265417868645, false},
    {{2.0, 2.0, -2.0, 1.0, 1.0, 2.0, -2.0, 0.0, 2.0, 0.0, -1.0, -2.0, 1.0, -2.0, 2.0, 1.0, -1.0, -1.0, -2.0}, {1.0, 2.0, -2.0, 1.0, 2.0, 2.0, -2.0, 1.0, 2.0, 0.0, -2.0, -2.0, 0.0, -2.0, 0.0, 1.0, -2.0, -1.0, -1.0}, 12.0, 0.36571229628151325, false},
    {{-0.515142, 0.099423, -2.135154, 0.495349, -1.419301, -0.660851, -0.41285, -1.156211, -1.371}, {-1.221224, 0.387499, -1.245172, 1.359584, -2.113792, -1.152428, -1.033453, -0.406399, -3.10842}, 22.0, 1.0, true},
    {{-0.484805, -0.783525, 0.339454, 1.032619, 0.342583, 1.052744, 0.134359, 1.229639, 1.24516, -0.099479, 1.439206, 0.164734, 0.086893, -0.921474, -0.28878, 0.777583, -1.312647, 0.649624}, {0.163811, -0.205964, -1.567038, 1.229376, 1.290843, 0.589789, 0.524666, -0.848434, 2.216553, -0.461912, 2.610563, -1.378052, 1.07916, -0.858413, 0.818824, 0.151873, -1.631104, 3.192075}, 69.0, 0.49507904052734375, true},
    {{-2.0, -1.0, 0.0, 2.0, 1.0, 2.0, 2.0, -1.0, 2.0, -2.0, -1.0, 2.0, -2.0, 1.0, 2.0, -1.0, 1.0, 0.0, 1.0, -1.0, -2.0, 2.0, -2.0, -1.0, -2.0}, {-2.0, 0.0, -2.0, 1.0, 0.0, 1.0, 2.0, -2.0, 1.0, -1.0, -1.0, 2.0, 0.0, 0.0, 0.0, 1.0, 0.0, -1.0, 2.0, 0.0, -2.0, 2.0, 0.0, -2.0, 0.0}, 94.0, 0.9665202812506224, false},
    {{1.375598, -0.493241, -0.773642, 1.016448, 0.139968, -1.102542, -0.379747, -0.755662, 0.296269}, {1.785283, 0.957206, 0.236023, -0.247086, 0.846959, 0.09439, 0.376132, 0.574398, 0.046692}, 8.0, 0.09765625, true},
    {{-0.950832, 0.93007, -1.065465, -2.159538, 1.0253, -0.724185, -0.306066, -1.397979}, {-1.97636, 0.073481, -1.126115, -1.489539, -0.972511, 0.327988, -1.188064, -2.164291}, 9.0, 0.25, true},
    {{1.0, 2.0, -2.0, 1.0, 2.0, -1.0, -1.0, 0.0}, {0.0, 1.0, 0.0, 2.0, 2.0, 0.0, 0.0, 1.0}, 7.0, 0.2059032107320684, false},
    {{1.00809, -0.74189, 1.122129, -0.762985, -0.362209, 1.895967, 0.316971, 0.109759, 2.242049, 0.361357, -0.816137, 0.734628}, {0.126409, 0.686427, 2.628107, -1.035944, -0.690111, 2.372471, 0.631126, -0.567929, 3.110137, -1.380519, -0.948996, 0.630687}, 39.0, 1.0, true},
    {{0.307224, -1.228022, 0.588515, -0.180154, -0.650216, -1.366826, -1.183109, 0.360325, -0.963849, 0.064199, 1.061983, 1.032643, 1.560397}, {0.310931, -2.013171, 1.909041, 0.42945, 0.773735, -1.05577, 0.312537, 1.506712, 0.052572, 0.867722, 1.759682, 1.565679, 2.086303}, 7.0, 0.004638671875, true},
    {{-2.0, 1.0, 1.0, -2.0, -1.0, 2.0}, {-2.0, 1.0, 2.0, -2.0, -2.0, 2.0}, 1.5, 1.0, false},
    {{-0.090241, -0.246666, 2.032241, -0.309345, -1.277217, -0.714082, -0.317228, 2.155192, 0.206756, 0.934713, -1.0016, 0.352608, 0.671478, 1.801627}, {-0.486511, 0.656823, 2.634825, -1.03106, -0.996673, -0.677557, -2.342593, 3.053861, 1.046999, 0.795778, -2.040162, 2.132489, 1.237477, 3.118328}, 38.0, 0.3909912109375, true},
};

}  // namespace oracle

#endif  // AGORA_TESTS_ORACLES_STATS_REFERENCE_HPP_
