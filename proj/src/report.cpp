#include "aci/report.hpp"

#include <iomanip>
#include <sstream>

#include "aci/parse.hpp"

namespace aci {

Json rational_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json to_json(const FamilyArgs& f) {
  Json j;
  j["name"] = f.name;
  if (f.name == "e1") {
    j["n"] = f.n > 0 ? f.n : static_cast<int>(f.b.size());
    j["b"] = f.b;
    j["c"] = f.c;
    j["sign"] = f.plus_sign ? "+" : "-";
  } else if (f.name == "rkl0") {
    j["p"] = f.p;
    j["q"] = f.q;
    j["d"] = f.d;
  } else if (f.name == "free") {
    j["e"] = f.e;
  } else if (f.name == "n1") {
    j["d1"] = f.d1;
  } else if (f.name == "three-point") {
    j["d"] = f.d;
    j["collinear"] = f.collinear;
  }
  return j;
}

namespace {

FamilyArgs family_from_json(const Json& j) {
  FamilyArgs f;
  f.name = j.at("name").get<std::string>();
  f.n = j.value("n", 0);
  f.b = j.value("b", std::vector<int>{});
  f.c = j.value("c", std::vector<int>{});
  f.plus_sign = j.value("sign", std::string("-")) == "+";
  f.p = j.value("p", 0);
  f.q = j.value("q", 0);
  f.d = j.value("d", 0);
  f.d1 = j.value("d1", 0);
  f.e = j.value("e", 2);
  f.collinear = j.value("collinear", true);
  return f;
}

}  // namespace

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["field"] = c.field;
  j["order"] = c.order;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["format"] = c.format;
  if (c.n > 0) j["n"] = c.n;
  if (c.hypersurface) j["f"] = *c.hypersurface;
  if (!c.aci.empty()) j["aci"] = c.aci;
  if (c.family) j["family"] = to_json(*c.family);
  if (c.alpha) j["alpha"] = *c.alpha;
  if (c.suite) j["suite"] = *c.suite;
  if (c.count) j["count"] = *c.count;
  if (c.max_degree) j["max_degree"] = *c.max_degree;
  if (c.dump) j["dump"] = true;
  return j;
}

RunConfig config_from_json(const Json& j) {
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.field = j.at("field").get<std::string>();
    c.order = j.at("order").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.trials = j.at("trials").get<int>();
    c.format = j.at("format").get<std::string>();
    c.n = j.value("n", 0);
    if (j.contains("f")) c.hypersurface = j["f"].get<std::string>();
    c.aci = j.value("aci", std::vector<std::string>{});
    if (j.contains("family")) c.family = family_from_json(j["family"]);
    if (j.contains("alpha")) c.alpha = j["alpha"].get<std::string>();
    if (j.contains("suite")) c.suite = j["suite"].get<std::string>();
    if (j.contains("count")) c.count = j["count"].get<int>();
    if (j.contains("max_degree")) c.max_degree = j["max_degree"].get<int>();
    c.dump = j.value("dump", false);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed run config: ") + e.what());
  }
}

Json to_json(const IntPoly& p) { return p.coefficients(); }

namespace {

Json rows_json(const std::vector<LefschetzRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"k", r.k},
                   {"dim_source", r.dim_source},
                   {"dim_target", r.dim_target},
                   {"rank", r.rank},
                   {"injective", r.injective()},
                   {"surjective", r.surjective()}});
  return out;
}

}  // namespace

Json to_json(const LefschetzProfile& p) {
  Json j;
  j["top"] = p.top;
  j["i0"] = p.i0;
  j["n_k"] = p.n_k;
  j["rows"] = rows_json(p.rows);
  j["m_rows"] = rows_json(p.m_rows);
  j["unimodal"] = p.unimodal;
  j["symmetric"] = p.symmetric;
  j["windows_hold"] = p.windows_hold;
  j["m_injective_below"] = p.m_injective_below;
  j["m_surjective_from_i0"] = p.m_surjective_from_i0;
  j["m_surjective_predicted"] = p.m_surjective_predicted;
  j["trials"] = p.trials;
  return j;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["n"] = r.n;
  j["degrees"] = r.degrees;
  if (r.d) j["d"] = *r.d;
  j["G"] = to_json(r.G);
  j["F"] = to_json(r.F);
  j["tau"] = r.tau;
  j["st"] = r.st;
  j["deg_F"] = r.deg_F;
  j["ct"] = r.ct ? Json(*r.ct) : Json(nullptr);
  j["mdr"] = r.mdr;
  j["relation_degree"] = r.relation_degree;
  if (r.ci_type) j["ci_type"] = *r.ci_type;
  j["saturated_equals_jacobian"] = r.saturated_equals_jacobian;
  if (r.lefschetz) j["lefschetz"] = to_json(*r.lefschetz);
  Json conj;
  conj["c1"] = {{"holds", r.c1.holds}, {"slack", r.c1.slack}};
  if (r.c2) conj["c2"] = {{"holds", r.c2->holds}, {"slack", rational_json(r.c2->slack)}};
  j["conjectures"] = conj;
  if (r.assumption_A_max_k) j["assumption_A_max_k"] = *r.assumption_A_max_k;
  j["cone"] = r.cone;
  if (r.cone) j["cone_witness"] = r.cone_witness;
  if (r.linear_change) j["linear_change"] = *r.linear_change;
  return j;
}

Json to_json(const Prediction& p) {
  Json j = Json::object();
  if (p.tau) j["tau"] = *p.tau;
  if (p.ct) j["ct"] = *p.ct;
  if (p.st) j["st"] = *p.st;
  if (p.mdr) j["mdr"] = *p.mdr;
  if (p.ci_type) j["ci_type"] = *p.ci_type;
  if (p.alpha) j["alpha"] = rational_json(*p.alpha);
  if (p.saturated_equals_jacobian) j["saturated_equals_jacobian"] = *p.saturated_equals_jacobian;
  if (p.m_surjective_from_i0) j["m_surjective_from_i0"] = *p.m_surjective_from_i0;
  if (p.cone) j["cone"] = *p.cone;
  if (!p.notes.empty()) j["notes"] = p.notes;
  return j;
}

Json to_json(const SuiteResult& s) {
  Json j;
  j["name"] = s.name;
  j["mandatory"] = s.mandatory;
  j["total"] = s.instances.size();
  j["passed"] = s.passed();
  j["findings"] = s.findings();
  j["ok"] = s.ok();
  Json list = Json::array();
  for (const auto& r : s.instances) {
    Json i;
    i["index"] = r.index;
    i["label"] = r.label;
    i["input"] = r.input;
    i["pass"] = r.pass;
    i["summary"] = r.summary;
    if (!r.failures.empty()) i["failures"] = r.failures;
    if (!r.findings.empty()) i["findings"] = r.findings;
    list.push_back(std::move(i));
  }
  j["instances"] = std::move(list);
  return j;
}

namespace {

/// The analyzed input, resolved from the config.
template <Field K>
struct Input {
  std::string kind;
  int nvars = 0;
  std::optional<Polynomial<K>> f;
  std::vector<Polynomial<K>> fs;
  std::optional<Prediction> predicted;
};

template <Field K>
Input<K> resolve_input(const K& field, const RunConfig& c) {
  const int given = (c.hypersurface ? 1 : 0) + (c.aci.empty() ? 0 : 1) + (c.family ? 1 : 0);
  if (given != 1) throw std::invalid_argument("give exactly one of -f, --aci, --family");
  Input<K> in;
  if (c.family) {
    auto inst = make_family(field, *c.family);
    in.kind = "family";
    in.f = inst.f;
    in.fs = inst.fs;
    in.nvars = inst.f ? inst.f->nvars() : inst.fs.front().nvars();
    in.predicted = inst.predicted;
  } else if (c.hypersurface) {
    in.kind = "hypersurface";
    in.nvars = (c.n > 0 ? c.n : 2) + 1;
    in.f = parse_polynomial(*c.hypersurface, field, in.nvars);
  } else {
    in.kind = "aci";
    in.nvars = c.n > 0 ? c.n + 1 : static_cast<int>(c.aci.size());
    for (const auto& t : c.aci) in.fs.push_back(parse_polynomial(t, field, in.nvars));
  }
  return in;
}

template <Field K>
Json input_json(const Input<K>& in, const RunConfig& c) {
  Json j;
  j["kind"] = in.kind;
  j["nvars"] = in.nvars;
  if (c.family) j["family"] = to_json(*c.family);
  if (in.f) j["f"] = in.f->to_string();
  if (!in.fs.empty()) {
    Json list = Json::array();
    for (const auto& g : in.fs) list.push_back(g.to_string());
    j["polynomials"] = std::move(list);
  }
  return j;
}

template <Field K>
CommandOutcome analyze_like(const K& field, const RunConfig& c, Json& doc) {
  CommandOutcome out;
  auto in = resolve_input(field, c);
  doc["input"] = input_json(in, c);
  std::mt19937_64 rng(c.seed);
  auto sys = in.f ? jacobian_ideal(*in.f, rng) : aci_system(in.fs);
  if (c.command == "profile" && sys.n() != 2) throw std::invalid_argument("profile needs n = 2 input");
  AnalyzeOptions opt;
  opt.seed = c.seed;
  opt.trials = c.trials;
  if (c.alpha) {
    mpq_class a(*c.alpha);
    a.canonicalize();
    opt.alpha = a;
  } else if (in.predicted && in.predicted->alpha) {
    opt.alpha = in.predicted->alpha;
  }
  auto rep = analyze(sys, opt);
  if (c.command == "profile") {
    Json p = to_json(*rep.lefschetz);
    if (rep.ct) p["ct"] = *rep.ct;
    p["deg_F"] = rep.deg_F;
    doc["profile"] = std::move(p);
  } else {
    doc["report"] = to_json(rep);
  }
  if (in.predicted) {
    auto mismatches = prediction_mismatches(*in.predicted, rep);
    if (c.command == "analyze") doc["predicted"] = to_json(*in.predicted);
    if (c.command == "profile" && in.predicted->m_surjective_from_i0)
      doc["predicted"] = {{"m_surjective_from_i0", *in.predicted->m_surjective_from_i0}};
    if (!mismatches.empty()) {
      doc["prediction_mismatches"] = mismatches;
      out.exit_code = kIdentityMismatch;
    }
  }
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string poly_text(const Json& coeffs) {
  std::ostringstream s;
  std::vector<std::int64_t> c = coeffs.get<std::vector<std::int64_t>>();
  s << IntPoly(c).to_string() << "   " << IntPoly(c).to_list();
  return s.str();
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string ints(const Json& list) {
  std::string s;
  for (const auto& v : list) s += (s.empty() ? "" : ",") + scalar(v);
  return s;
}

void profile_table(std::ostringstream& s, const Json& p) {
  s << "Lefschetz profile  T=" << p["top"] << "  i0=" << p["i0"] << "  trials=" << p["trials"] << "\n";
  s << "  N = I/J\n    k  n_k  n_k+1  rank  inj  surj\n";
  for (const auto& r : p["rows"])
    s << "   " << std::setw(2) << r["k"].get<int>() << std::setw(5) << r["dim_source"].get<std::size_t>()
      << std::setw(7) << r["dim_target"].get<std::size_t>() << std::setw(6) << r["rank"].get<std::size_t>()
      << std::setw(5) << yes(r["injective"]) << std::setw(6) << yes(r["surjective"]) << "\n";
  s << "  M = S/J\n    k  dim  dim+1  rank  inj  surj\n";
  for (const auto& r : p["m_rows"])
    s << "   " << std::setw(2) << r["k"].get<int>() << std::setw(5) << r["dim_source"].get<std::size_t>()
      << std::setw(7) << r["dim_target"].get<std::size_t>() << std::setw(6) << r["rank"].get<std::size_t>()
      << std::setw(5) << yes(r["injective"]) << std::setw(6) << yes(r["surjective"]) << "\n";
  s << "  n_k            (" << ints(p["n_k"]) << ")\n";
  s << "  symmetric      " << yes(p["symmetric"]) << "\n";
  s << "  unimodal       " << yes(p["unimodal"]) << "\n";
  s << "  N windows      " << (p["windows_hold"].get<bool>() ? "PASS" : "FAIL") << "\n";
  s << "M-surjectivity from i0: " << (p["m_surjective_from_i0"].get<bool>() ? "PASS" : "FAIL")
    << " (predicted by i0 >= deg F: " << yes(p["m_surjective_predicted"]) << ")\n";
}

std::string table_of(const Json& doc) {
  std::ostringstream s;
  const auto& c = doc["config"];
  s << c["command"].get<std::string>() << "  field " << c["field"].get<std::string>() << "  seed " << c["seed"]
    << "  trials " << c["trials"] << "\n";
  if (doc.contains("input")) {
    const auto& in = doc["input"];
    if (in.contains("family")) s << "family   " << in["family"].dump() << "\n";
    if (in.contains("f")) s << "f        " << in["f"].get<std::string>() << "\n";
    if (in.contains("polynomials")) {
      int i = 0;
      for (const auto& p : in["polynomials"]) s << "f" << i++ << "       " << p.get<std::string>() << "\n";
    }
  }
  if (doc.contains("error")) {
    s << "error (" << doc["error"]["kind"].get<std::string>() << "): " << doc["error"]["message"].get<std::string>()
      << "\n";
    return s.str();
  }
  if (doc.contains("report")) {
    const auto& r = doc["report"];
    s << "degrees          " << ints(r["degrees"]) << "\n";
    if (r.contains("linear_change")) s << "linear change    " << r["linear_change"].get<std::string>() << "\n";
    s << "G                " << poly_text(r["G"]) << "\n";
    s << "F                " << poly_text(r["F"]) << "\n";
    s << "tau              " << r["tau"] << "\n";
    s << "st               " << r["st"] << "\n";
    s << "deg F            " << r["deg_F"] << "\n";
    s << "ct               " << (r["ct"].is_null() ? "-" : r["ct"].dump()) << "\n";
    s << "mdr              " << r["mdr"] << "\n";
    s << "relation degree  " << r["relation_degree"] << "\n";
    s << "ci_type          " << (r.contains("ci_type") ? ints(r["ci_type"]) : "-") << "\n";
    s << "sat(J) == J      " << yes(r["saturated_equals_jacobian"]) << "\n";
    s << "cone             " << yes(r["cone"]);
    if (r.contains("cone_witness")) s << "  relation (" << ints(r["cone_witness"]) << ")";
    s << "\n";
    s << "assumption A k   " << (r.contains("assumption_A_max_k") ? r["assumption_A_max_k"].dump() : "none") << "\n";
    const auto& cj = r["conjectures"];
    s << "C1 deg G >= deg F    " << (cj["c1"]["holds"].get<bool>() ? "holds" : "VIOLATED") << ", slack "
      << scalar(cj["c1"]["slack"]) << "\n";
    if (cj.contains("c2"))
      s << "C2 mdr >= d a - n    " << (cj["c2"]["holds"].get<bool>() ? "holds" : "VIOLATED") << ", slack "
        << scalar(cj["c2"]["slack"]) << "\n";
    if (r.contains("lefschetz")) profile_table(s, r["lefschetz"]);
  }
  if (doc.contains("profile")) {
    const auto& p = doc["profile"];
    if (p.contains("ct")) s << "ct " << p["ct"] << "  deg F " << p["deg_F"] << "\n";
    profile_table(s, p);
    if (c.value("dump", false)) {
      // plot-ready lists, lowest degree first
      Json n_rank = Json::array(), m_dim = Json::array(), m_rank = Json::array();
      for (const auto& r : p["rows"]) n_rank.push_back(r["rank"]);
      for (const auto& r : p["m_rows"]) {
        m_dim.push_back(r["dim_source"]);
        m_rank.push_back(r["rank"]);
      }
      s << "dump n_k " << p["n_k"].dump() << "\ndump n_rank " << n_rank.dump() << "\ndump m_dim " << m_dim.dump()
        << "\ndump m_rank " << m_rank.dump() << "\n";
    }
  }
  if (doc.contains("predicted")) {
    s << "predicted        " << doc["predicted"].dump() << "\n";
    if (doc.contains("prediction_mismatches"))
      for (const auto& m : doc["prediction_mismatches"]) s << "  MISMATCH " << m.get<std::string>() << "\n";
    else
      s << "  all predictions match\n";
  }
  if (doc.contains("suite")) {
    const auto& su = doc["suite"];
    for (const auto& i : su["instances"]) {
      s << (i["pass"].get<bool>() ? "  ok    " : "  FAIL  ") << "#" << i["index"] << " " << i["label"].get<std::string>()
        << ": " << i["summary"].get<std::string>() << "\n";
      if (i.contains("failures"))
        for (const auto& f : i["failures"]) s << "        failure: " << f.get<std::string>() << "\n";
      if (i.contains("findings"))
        for (const auto& f : i["findings"]) s << "        finding: " << f.get<std::string>() << "\n";
      if ((i.contains("failures") || i.contains("findings")))
        for (const auto& p : i["input"]) s << "        input: " << p.get<std::string>() << "\n";
    }
    s << su["name"].get<std::string>() << ": " << su["passed"] << "/" << su["total"] << " passed, " << su["findings"]
      << " findings" << (su["mandatory"].get<bool>() ? "" : " (conjecture screen)") << " -> "
      << (su["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return s.str();
}

template <Field K>
CommandOutcome run_in(const K& field, const RunConfig& c) {
  CommandOutcome out;
  Json doc;
  doc["config"] = to_json(c);
  auto fail = [&](int code, const char* kind, const std::string& message) {
    doc.erase("report");
    doc.erase("profile");
    doc["error"] = {{"kind", kind}, {"message", message}};
    out.exit_code = code;
  };
  try {
    if (c.command == "verify") {
      if (!c.suite) throw std::invalid_argument("verify needs a suite name");
      SuiteOptions o;
      o.seed = c.seed;
      o.count = c.count;
      o.trials = c.trials;
      if (c.n > 0) o.n = c.n;
      o.max_degree = c.max_degree;
      o.family = c.family;
      auto result = run_suite(field, *c.suite, o);
      doc["suite"] = to_json(result);
      out.exit_code = result.ok() ? kOk : kIdentityMismatch;
    } else if (c.command == "analyze" || c.command == "profile") {
      out.exit_code = analyze_like(field, c, doc).exit_code;
    } else {
      throw std::invalid_argument("unknown command '" + c.command + "'");
    }
  } catch (const ParseError& e) {
    fail(kParseError, "parse", e.what());
  } catch (const HypothesisError& e) {
    fail(kHypothesisFailure, "hypothesis", e.what());
  } catch (const IdentityMismatch& e) {
    fail(kIdentityMismatch, "identity-mismatch", e.what());
  }
  out.document = std::move(doc);
  out.table = table_of(out.document);
  return out;
}

}  // namespace

CommandOutcome run_command(const RunConfig& c) {
  if (c.order != "degrevlex") throw std::invalid_argument("only --order degrevlex is supported");
  if (c.format != "table" && c.format != "json") throw std::invalid_argument("--format must be table or json");
  if (c.trials < 1) throw std::invalid_argument("--trials must be positive");
  if (c.field == "rational") return run_in(RationalField{}, c);
  if (c.field.rfind("gf:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(c.field.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field '" + c.field + "'");
    }
    if (p > 0xffffffffULL) throw std::invalid_argument("modulus too large");
    std::optional<PrimeField> field;
    try {
      field.emplace(static_cast<std::uint32_t>(p));
    } catch (const FieldError& e) {
      throw std::invalid_argument(e.what());
    }
    return run_in(*field, c);
  }
  throw std::invalid_argument("field must be gf:<p> or rational");
}

std::string render(const CommandOutcome& outcome, const RunConfig& config) {
  if (config.format == "json") return outcome.document.dump(2) + "\n";
  return outcome.table;
}

}  // namespace aci
