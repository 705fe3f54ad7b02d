#include "rankone/json_io.hpp"

namespace rankone {

Json report_to_json(const StructureReport& r) {
  Json j;
  j["check"] = r.check;
  j["ring"] = r.ring;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json triple_to_json(const EmbeddedTriple& t) {
  Json j;
  j["sheet"] = t.sheet > 0 ? "+" : "-";
  j["x"] = t.x;
  j["Q"] = matrix_to_json(t.Q);
  j["P"] = matrix_to_json(t.P);
  return j;
}

}  // namespace rankone
