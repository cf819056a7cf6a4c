#pragma once

// The shipped fixture library as documents keyed by file name.

#include <metriclie/io.hpp>

namespace metriclie {

inline std::map<std::string, json> fixture_library() {
  namespace fx = fixtures;
  std::map<std::string, json> out;
  auto put = [&](const std::string& name, json doc) { out[name + ".json"] = std::move(doc); };

  for (const auto& [name, l] : std::vector<std::pair<std::string, LieAlgebra>>{{"h1", fx::h1()},
                                                                                 {"g41", fx::g41()},
                                                                                 {"g52", fx::g52()},
                                                                                 {"g64", fx::g64()},
                                                                                 {"g65", fx::g65()},
                                                                                 {"h1r", fx::h1_plus_r()},
                                                                                 {"n5", fx::n5()},
                                                                                 {"r2", fx::abelian(2)},
                                                                                 {"r3", fx::abelian(3)},
                                                                                 {"r4", fx::abelian(4)},
                                                                                 {"r5", fx::abelian(5)}})
    put(name, to_json(l));

  for (const auto& e : list_entries()) put(e.module_fixture, to_json(e.module()));
  put("mod_witt22", to_json(fx::witt22()));

  auto ref = [](const std::string& s) { return json("@" + s); };
  put("cocycle_g64", to_json(fx::cocycle_g64().cocycle, ref("g64"), ref("mod_witt22")));
  put("cocycle_g65", to_json(fx::cocycle_g65().cocycle, ref("g65"), ref("mod_witt22")));

  // catalog rows; parameter families at parameter 1
  for (const auto& e : list_entries()) {
    std::map<std::string, Scalar> params;
    if (!e.param.empty()) params[e.param] = 1;
    auto inst = instantiate(e, params);
    put("catalog/" + e.id, to_json(inst.cocycle, ref(e.algebra_fixture), ref(e.module_fixture)));
  }
  return out;
}

}  // namespace metriclie
