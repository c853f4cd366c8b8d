#pragma once

// Reference values for the verify harness.

#include <string>
#include <utility>
#include <vector>

namespace rankalg::reference {

inline const std::vector<std::string>& csiszar_n4_minors() {
  static const std::vector<std::string> v{
      "p_{1243} p_{2134} - p_{1234} p_{2143}", "p_{1342} p_{3124} - p_{1324} p_{3142}",
      "p_{1432} p_{4123} - p_{1423} p_{4132}", "p_{2341} p_{3214} - p_{2314} p_{3241}",
      "p_{2431} p_{4213} - p_{2413} p_{4231}", "p_{3421} p_{4312} - p_{3412} p_{4321}",
  };
  return v;
}

inline const std::vector<std::string>& inversion_n3_quadrics() {
  static const std::vector<std::string> v{"p_{132} p_{231} - p_{123} p_{321}", "p_{213} p_{312} - p_{123} p_{321}"};
  return v;
}

inline const std::string& ascending_n3_cubic() {
  static const std::string s = "p_{123} p_{231} p_{312} - p_{132} p_{213} p_{321}";
  return s;
}

inline const std::string& ascending_n4_cubic() {
  static const std::string s = "p_{1234} p_{1342} p_{1423} - p_{1243} p_{1324} p_{1432}";
  return s;
}

/// Element of the inversion ideal for n = 4 used with the derangement point.
inline const std::string& inversion_n4_quadric() {
  static const std::string s = "p_{1243} p_{4321} - p_{2143} p_{4312}";
  return s;
}

/// Degree-3 fiber for n = 6: inversion multiset and its two monomials.
inline const std::vector<std::pair<int, int>>& inversion_n6_fiber_inversions() {
  static const std::vector<std::pair<int, int>> v{{1, 4}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}, {5, 6}};
  return v;
}
inline const std::vector<std::vector<std::string>>& inversion_n6_fiber_monomials() {
  static const std::vector<std::vector<std::string>> v{{"123456", "123645", "416253"}, {"123465", "162345", "412536"}};
  return v;
}

inline const std::vector<std::string>& mixed_n4_states() {
  static const std::vector<std::string> v{"1234", "1243", "1423", "4123"};
  return v;
}

inline const std::vector<std::string>& mixed_n5_inversion_quadrics() {
  static const std::vector<std::string> v{
      "p_{41523}p_{51423}-p_{14523}p_{54123}", "p_{41253}p_{51423}-p_{14253}p_{54123}",
      "p_{41235}p_{51423}-p_{14235}p_{54123}", "p_{41253}p_{51243}-p_{12453}p_{54123}",
      "p_{41235}p_{51243}-p_{12435}p_{54123}", "p_{15423}p_{51243}-p_{15243}p_{51423}",
      "p_{14253}p_{51243}-p_{12453}p_{51423}", "p_{14235}p_{51243}-p_{12435}p_{51423}",
      "p_{41235}p_{51234}-p_{12345}p_{54123}", "p_{15423}p_{51234}-p_{15234}p_{51423}",
      "p_{15243}p_{51234}-p_{15234}p_{51243}", "p_{14235}p_{51234}-p_{12345}p_{51423}",
      "p_{12543}p_{51234}-p_{12534}p_{51243}", "p_{12435}p_{51234}-p_{12345}p_{51243}",
      "p_{15423}p_{45123}-p_{14523}p_{54123}", "p_{15243}p_{45123}-p_{41523}p_{51243}",
      "p_{15234}p_{45123}-p_{41523}p_{51234}", "p_{12543}p_{45123}-p_{12453}p_{54123}",
      "p_{12534}p_{45123}-p_{41253}p_{51234}", "p_{12354}p_{45123}-p_{12345}p_{54123}",
      "p_{15243}p_{41253}-p_{12543}p_{41523}", "p_{15234}p_{41253}-p_{12534}p_{41523}",
      "p_{14523}p_{41253}-p_{14253}p_{41523}", "p_{15234}p_{41235}-p_{12354}p_{41523}",
      "p_{14523}p_{41235}-p_{14235}p_{41523}", "p_{14253}p_{41235}-p_{14235}p_{41253}",
      "p_{12534}p_{41235}-p_{12354}p_{41253}", "p_{12453}p_{41235}-p_{12435}p_{41253}",
      "p_{14253}p_{15243}-p_{12453}p_{15423}", "p_{14235}p_{15243}-p_{12435}p_{15423}",
      "p_{14235}p_{15234}-p_{12345}p_{15423}", "p_{12543}p_{15234}-p_{12534}p_{15243}",
      "p_{12435}p_{15234}-p_{12345}p_{15243}", "p_{12543}p_{14523}-p_{12453}p_{15423}",
      "p_{12534}p_{14523}-p_{14253}p_{15234}", "p_{12354}p_{14523}-p_{12345}p_{15423}",
      "p_{12534}p_{14235}-p_{12354}p_{14253}", "p_{12453}p_{14235}-p_{12435}p_{14253}",
      "p_{12435}p_{12534}-p_{12345}p_{12543}", "p_{12354}p_{12453}-p_{12345}p_{12543}",
  };
  return v;
}

inline const std::vector<std::string>& mixed_n5_alt_inversion_generators() {
  static const std::vector<std::string> v{
      "p_{15243}p_{51423} - p_{12543}p_{54123}", "p_{15234}p_{51423} - p_{12534}p_{54123}",
      "p_{15423}p_{51243} - p_{12543}p_{54123}", "p_{15234}p_{51243} - p_{12354}p_{54123}",
      "p_{12534}p_{51243} - p_{12354}p_{51423}", "p_{15423}p_{51234} - p_{12534}p_{54123}",
      "p_{15243}p_{51234} - p_{12354}p_{54123}", "p_{15234}p_{51234} - p_{12345}p_{54123}",
      "p_{12543}p_{51234} - p_{12354}p_{51423}", "p_{12534}p_{51234} - p_{12345}p_{51423}",
      "p_{12354}p_{51234} - p_{12345}p_{51243}", "p_{12534}p_{15243} - p_{12354}p_{15423}",
      "p_{12543}p_{15234} - p_{12354}p_{15423}", "p_{12534}p_{15234} - p_{12345}p_{15423}",
      "p_{12354}p_{15234} - p_{12345}p_{15243}", "p_{12354}p_{12534} - p_{12345}p_{12543}",
      "p_{12435}p_{12453} - p_{12345}p_{12543}",
      "p_{14235}p_{14253}p_{14523} - p_{12345}p_{15243}p_{15423}",
      "p_{41235}p_{41253}p_{41523}p_{45123} - p_{12345}p_{51243}p_{51423}p_{54123}",
  };
  return v;
}

inline const std::vector<std::string>& pl3_generators() {
  static const std::vector<std::string> v{
      "p_{123}(p_{321} + p_{231}) - p_{213}(p_{132} + p_{312})",
      "p_{312}(p_{123} + p_{213}) - p_{132}(p_{231} + p_{321})",
      "p_{231}(p_{132} + p_{312}) - p_{321}(p_{123} + p_{213})",
      "p_{123}p_{231}p_{312} - p_{132}p_{321}p_{213}",
  };
  return v;
}

/// Components of the lex initial ideal of the PL_3 ideal, as prime supports.
inline const std::vector<std::vector<std::string>>& pl3_initial_primes() {
  static const std::vector<std::vector<std::string>> v{
      {"123", "132", "231"}, {"123", "132", "312"}, {"123", "132", "213"}, {"123", "213", "231"},
      {"123", "213", "312"}, {"123", "312", "321"}, {"231", "312", "321"},
  };
  return v;
}

/// Points e_a - e_b.
inline const std::vector<std::pair<std::string, std::string>>& pl3_special_points() {
  static const std::vector<std::pair<std::string, std::string>> v{{"321", "231"}, {"123", "213"}, {"132", "312"}};
  return v;
}

inline const std::vector<std::pair<std::string, std::string>>& pl3_images() {
  static const std::vector<std::pair<std::string, std::string>> v{
      {"123", "t2 t3 (t1 + t3) (t2 + t3)"}, {"132", "t2 t3 (t1 + t2) (t2 + t3)"}, {"213", "t1 t3 (t1 + t3) (t2 + t3)"},
      {"231", "t1 t3 (t1 + t2) (t1 + t3)"}, {"312", "t1 t2 (t1 + t2) (t2 + t3)"}, {"321", "t1 t2 (t1 + t2) (t1 + t3)"},
  };
  return v;
}

/// Constraint poset {1<2, 3<4}.
inline const std::vector<std::pair<std::string, std::string>>& two_chain_images() {
  static const std::vector<std::pair<std::string, std::string>> v{
      {"1234", "t3 (t1 + t3) (t3 + t4) (t1 + t3 + t4)"}, {"1324", "t3 (t1 + t2) (t3 + t4) (t1 + t3 + t4)"},
      {"1342", "t3 (t1 + t2) (t3 + t4) (t1 + t2 + t3)"}, {"3124", "t1 (t1 + t2) (t3 + t4) (t1 + t3 + t4)"},
      {"3142", "t1 (t1 + t2) (t3 + t4) (t1 + t2 + t3)"}, {"3412", "t1 (t1 + t2) (t1 + t3) (t1 + t2 + t3)"},
  };
  return v;
}
inline const std::string& two_chain_cubic() {
  static const std::string s =
      "p_{1234} p_{1342} p_{3142} + p_{1234} p_{3142}^2 + p_{1234} p_{3142} p_{3412}"
      " - p_{1234} p_{1324} p_{3412} - p_{1324}^2 p_{3412} - p_{1324} p_{3124} p_{3412}";
  return s;
}
inline const std::string& two_chain_quadric() {
  static const std::string s = "p_{1342}p_{3124} - p_{1324} p_{3142}";
  return s;
}
inline const std::vector<std::vector<std::string>>& two_chain_sr_ideal() {
  static const std::vector<std::vector<std::string>> v{{"1", "3"},   {"3", "12"},  {"12", "13"},  {"1", "34"},   {"12", "34"},
                                                       {"13", "34"}, {"34", "123"}, {"12", "134"}, {"123", "134"}};
  return v;
}
inline const std::vector<std::vector<std::string>>& two_chain_sr_dual() {
  static const std::vector<std::vector<std::string>> v{
      {"3", "13", "34", "134"}, {"3", "12", "34", "123"}, {"1", "12", "34", "123"},
      {"3", "12", "34", "134"}, {"1", "12", "34", "134"}, {"1", "12", "13", "123"},
  };
  return v;
}

/// Pairwise marginals for n = 3: (pair, words summed for q_ij, words for q_ji).
struct PairMarginal {
  int i, j;
  std::vector<std::string> forward, backward;
};
inline const std::vector<PairMarginal>& n3_pairwise_marginals() {
  static const std::vector<PairMarginal> v{
      {1, 2, {"123", "132", "312"}, {"213", "231", "321"}},
      {1, 3, {"132", "123", "213"}, {"312", "321", "231"}},
      {2, 3, {"123", "213", "231"}, {"132", "312", "321"}},
  };
  return v;
}
inline const std::string& bt3_circuit() {
  static const std::string s = "q_{12} q_{23} q_{31} - q_{21} q_{32} q_{13}";
  return s;
}

inline const std::vector<long>& inversion_n4_numerator() {
  static const std::vector<long> v{1, 17, 72, 72, 17, 1};
  return v;
}
inline const std::vector<long>& ascending_n4_numerator() {
  static const std::vector<long> v{1, 12, 72, 228, 291, 168, 36};
  return v;
}
inline const std::vector<long>& mixed_n5_numerator() {
  static const std::vector<long> v{1, 12, 38, 28, 3};
  return v;
}
inline const std::vector<long>& mixed_n5_alt_numerator() {
  static const std::vector<long> v{1, 9, 28, 51, 66, 63, 44, 21, 5};
  return v;
}
inline const std::vector<std::string>& csiszar_n5_numerator() {
  static const std::vector<std::string> v{
      "1",          "70",         "2215",       "42020",      "534635",     "4837694",    "32227985",
      "161529320",  "617560160",  "1816401720", "4129171068", "7265606880", "9880962560", "10337876480",
      "8250364160", "4953798656", "2189864960", "688455680",  "145162240",  "18350080",   "1048576",
  };
  return v;
}
inline const std::string& csiszar_n5_degree() {
  static const std::string s = "50493797160";
  return s;
}

}  // namespace rankalg::reference
