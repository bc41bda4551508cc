#include "kdw/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kdw/brieskorn.hpp"
#include "kdw/cyclicrep.hpp"
#include "kdw/error.hpp"
#include "kdw/ffield.hpp"
#include "kdw/induction.hpp"
#include "kdw/psl2.hpp"
#include "kdw/serialize.hpp"

namespace kdw::cli {

using io::json;

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size() || item.empty()) {
      throw Error(Errc::InvalidArgument, "malformed integer list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty() || text.back() == ',') throw Error(Errc::InvalidArgument, "malformed integer list '" + text + "'");
  return out;
}

namespace {

struct Options {
  std::int64_t p = 0;
  std::string k;
  std::string l;
  std::string format = "text";
  std::string group = "cyclic";
  std::string seed;
  bool oracle = false;
  bool count_only = false;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json elem_json(const psl2::Elem& x) {
  return json::array({json::array({x.a, x.b}), json::array({x.c, x.d})});
}

json hom_json(const psl2::Group& g, const brieskorn::HomPair& h) {
  return json{{"X", elem_json(h.X)}, {"Y", elem_json(h.Y)}, {"Z", elem_json(brieskorn::third(g, h))}};
}

std::string hom_text(const psl2::Group& g, const brieskorn::HomPair& h) {
  return "X=" + psl2::to_string(h.X) + " Y=" + psl2::to_string(h.Y) +
         " Z=" + psl2::to_string(brieskorn::third(g, h));
}

class Document {
 public:
  Document(std::string command, bool json_format) : json_(json_format) { add("command", command); }

  void add(const std::string& key, const json& value) { header_[key] = value; }
  void note(const std::string& key, const std::string& value) { header_[key] = value; }

  void emit(std::ostream& out, const std::string& text, const json& result) const {
    if (json_) {
      out << json{{"header", header_}, {"result", result}}.dump(2) << "\n";
      return;
    }
    for (const auto& [key, value] : header_.items()) {
      out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    out << text << "\n";
  }

 private:
  bool json_;
  json header_ = json::object();
};

std::uint32_t field_prime(std::int64_t p) {
  require_field_prime(p);
  return static_cast<std::uint32_t>(p);
}

psl2::Group make_group(std::uint32_t p, const std::string& seed) {
  if (seed.empty()) return psl2::Group(p);
  std::vector<std::int64_t> v;
  std::string rest = seed;
  const auto colon = rest.find(':');
  if (colon == std::string::npos) {
    throw Error(Errc::InvalidArgument, "--seed-generators expects delta,zeta_minus,x:y");
  }
  rest[colon] = ',';
  v = parse_int_list(rest);
  if (v.size() != 4) throw Error(Errc::InvalidArgument, "--seed-generators expects delta,zeta_minus,x:y");
  return psl2::Group(p, psl2::Generators::from_values(p, v[0], v[1], v[2], v[3]));
}

void require_formats(const Options& o) {
  if (o.format != "text" && o.format != "json") {
    throw Error(Errc::InvalidArgument, "--format must be text or json");
  }
}

brieskorn::Triple triple(const std::string& text, const char* what) {
  const auto v = parse_int_list(text);
  if (v.size() != 3) throw Error(Errc::InvalidArgument, std::string(what) + " needs exactly three values");
  return {v[0], v[1], v[2]};
}

void cmd_xi(const Options& o, std::ostream& out) {
  const std::vector<std::int64_t> ls = parse_int_list(o.l);
  const std::int64_t k = parse_int_list(o.k).at(0);
  const XiVector xi = xi_vector(k, ls);
  if (o.format == "json") {
    out << json{{"k", k}, {"l", ls}, {"entries", io::to_json(xi)}}.dump(2) << "\n";
    return;
  }
  out << "# command: xi\n# k: " << k << "\n# l: " << join(ls) << "\n" << xi.text() << "\n";
}

void cmd_lens(const Options& o, std::ostream& out) {
  const std::vector<std::int64_t> ls = parse_int_list(o.l);
  const std::int64_t k = parse_int_list(o.k).at(0);
  const bool js = o.format == "json";
  Document doc("lens", js);
  doc.add("group", o.group);
  doc.add("k", k);
  doc.add("l", ls);
  if (o.group == "cyclic") {
    const auto fs = lens_kdw_cyclic(k, ls);
    doc.emit(out, fs.text(), io::to_json(fs));
  } else if (o.group == "psl2") {
    const std::uint32_t p = field_prime(o.p);
    const psl2::Group g = make_group(p, o.seed);
    doc.add("p", p);
    doc.note("generators", g.generators().describe());
    const auto fs = lens_kdw_psl2(p, k, ls);
    doc.emit(out, fs.text(), io::to_json(fs));
  } else {
    throw Error(Errc::InvalidArgument, "--group must be cyclic or psl2");
  }
}

void cmd_brieskorn(const Options& o, std::ostream& out) {
  const std::uint32_t p = field_prime(o.p);
  const psl2::Group g = make_group(p, o.seed);
  brieskorn::SeifertData sd;
  sd.k = triple(o.k, "--k");
  Document doc("brieskorn", o.format == "json");
  doc.add("p", p);
  doc.add("k", sd.k);
  if (o.l.empty()) {
    sd.l = brieskorn::find_ell(sd.k);
    doc.note("l_source", "find-ell");
  } else {
    sd.l = triple(o.l, "--l");
    doc.note("l_source", "user");
  }
  doc.add("l", sd.l);
  doc.note("generators", g.generators().describe());
  const auto fs = brieskorn::brieskorn_kdw(p, sd);
  if (brieskorn::brieskorn_kdw_from_representatives(g, sd) != fs) {
    throw Error(Errc::NoSolution, "representative assembly disagrees with the closed form");
  }
  doc.note("representatives", "agree");
  if (o.oracle) {
    if (brieskorn::brieskorn_kdw_oracle(g, sd) != fs) {
      throw Error(Errc::NoSolution, "brute-force oracle disagrees with the closed form");
    }
    doc.note("oracle", "agree");
  }
  doc.emit(out, fs.text(), io::to_json(fs));
}

void cmd_psl2_classes(const Options& o, std::ostream& out) {
  const std::uint32_t p = field_prime(o.p);
  const psl2::Group g = make_group(p, o.seed);
  Document doc("psl2-classes", o.format == "json");
  doc.add("p", p);
  doc.note("generators", g.generators().describe());
  json result = json::array();
  std::string text;
  std::int64_t total = 0;
  for (const auto& c : g.classes()) {
    result.push_back(json{{"class", psl2::to_string(c.id)},
                          {"tag", std::string(psl2::class_tag_name(c.id.tag))},
                          {"trace_pm", c.id.trace_pm},
                          {"order", g.element_order(c.rep)},
                          {"size", c.size},
                          {"rep", elem_json(c.rep)}});
    text += psl2::to_string(c.id) + " order=" + std::to_string(g.element_order(c.rep)) +
            " size=" + std::to_string(c.size) + " rep=" + psl2::to_string(c.rep) + "\n";
    total += c.size;
  }
  doc.add("order", g.order());
  text += "total=" + std::to_string(total);
  doc.emit(out, text, result);
}

void cmd_psl2_r(const Options& o, std::ostream& out) {
  const std::uint32_t p = field_prime(o.p);
  const std::int64_t k = parse_int_list(o.k).at(0);
  Document doc("psl2-r", o.format == "json");
  doc.add("p", p);
  doc.add("k", k);
  const std::int64_t r = psl2::r_count(p, k);
  doc.emit(out, std::to_string(r), r);
}

void cmd_psl2_k1(const Options& o, std::ostream& out) {
  const std::uint32_t p = field_prime(o.p);
  Document doc("psl2-k1", o.format == "json");
  doc.add("p", p);
  json result = json::object();
  std::string text;
  for (const auto& [q, r] : psl2::k1_structure(p)) {
    result[std::to_string(q)] = r;
    text += (text.empty() ? "" : " ") + std::to_string(q) + ":" + std::to_string(r);
  }
  doc.emit(out, text, result);
}

void cmd_cheb_sol(const Options& o, std::ostream& out) {
  const std::uint32_t p = field_prime(o.p);
  const std::int64_t k = parse_int_list(o.k).at(0);
  Document doc("cheb-sol", o.format == "json");
  doc.add("p", p);
  doc.add("k", k);
  const auto sol = brieskorn::sol_set(p, k);
  std::vector<std::int64_t> v(sol.begin(), sol.end());
  doc.emit(out, "{" + join(v) + "}", v);
}

void cmd_homs(const Options& o, std::ostream& out) {
  const std::uint32_t p = field_prime(o.p);
  const psl2::Group g = make_group(p, o.seed);
  const brieskorn::Triple ks = triple(o.k, "--k");
  Document doc("homs", o.format == "json");
  doc.add("p", p);
  doc.add("k", ks);
  doc.note("generators", g.generators().describe());
  const auto homs = brieskorn::enumerate_homs_brute(g, ks);
  const auto count = static_cast<std::int64_t>(homs.size());
  if (o.count_only) {
    doc.emit(out, std::to_string(count), count);
    return;
  }
  const auto adm = brieskorn::admissible_set(p, ks);
  const auto orbits = brieskorn::orbit_sizes(g, homs);
  json reps = json::array();
  std::string text = "count=" + std::to_string(count) +
                     "\nformula=" + std::to_string(brieskorn::hom_count_formula(p, ks)) +
                     "\nadmissible=" + std::to_string(adm.size()) +
                     "\norbits=" + std::to_string(orbits.size());
  for (const auto& t : adm) {
    const auto [phi1, phi2] = brieskorn::explicit_hom_pair(g, ks, t);
    const json trace = json::array({t.a, t.b, t.c});
    reps.push_back(json{{"trace", trace}, {"phi1", hom_json(g, phi1)}, {"phi2", hom_json(g, phi2)}});
    text += "\n(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) +
            ") phi1: " + hom_text(g, phi1) + " phi2: " + hom_text(g, phi2);
  }
  const json result{{"count", count},
                    {"formula", brieskorn::hom_count_formula(p, ks)},
                    {"admissible", adm.size()},
                    {"orbits", orbits.size()},
                    {"representatives", reps}};
  doc.emit(out, text, result);
}

void cmd_find_ell(const Options& o, std::ostream& out) {
  const brieskorn::Triple ks = triple(o.k, "--k");
  const brieskorn::Triple ls = brieskorn::find_ell(ks);
  Document doc("find-ell", o.format == "json");
  doc.add("k", ks);
  doc.emit(out, join({ls[0], ls[1], ls[2]}), ls);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact alpha-KDW invariants of lens spaces and Brieskorn spheres"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_p = [&](CLI::App* sub) { sub->add_option("-p", o.p, "odd prime p >= 5")->required(); };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed-generators", o.seed, "explicit generators: delta,zeta_minus,x:y");
  };

  auto* xi = app.add_subcommand("xi", "signature vector xi(k; l)");
  xi->add_option("-k,--k", o.k, "odd prime k")->required();
  xi->add_option("-l,--l", o.l, "twist parameters l1[,l2,...]")->required();
  add_format(xi);

  auto* lens = app.add_subcommand("lens", "invariant of the lens space L(k; l)");
  lens->add_option("--group", o.group, "cyclic or psl2")->check(CLI::IsMember({"cyclic", "psl2"}));
  lens->add_option("-p", o.p, "odd prime p >= 5 (psl2 only)");
  lens->add_option("-k,--k", o.k, "odd prime k")->required();
  lens->add_option("-l,--l", o.l, "twist parameter")->required();
  add_format(lens);
  add_seed(lens);

  auto* bries = app.add_subcommand("brieskorn", "invariant of Sigma(k1,k2,k3) with PSL_2(F_p)");
  add_p(bries);
  bries->add_option("-k,--k", o.k, "k1,k2,k3")->required();
  bries->add_option("-l,--l", o.l, "l1,l2,l3 (default: find-ell)");
  bries->add_flag("--oracle", o.oracle, "also run the brute-force oracle and compare");
  add_format(bries);
  add_seed(bries);

  auto* psl2_cmd = app.add_subcommand("psl2", "PSL_2(F_p) structure");
  psl2_cmd->require_subcommand(1);
  auto* classes = psl2_cmd->add_subcommand("classes", "conjugacy classes");
  auto* r = psl2_cmd->add_subcommand("r", "number of classes of k-power order");
  auto* k1 = psl2_cmd->add_subcommand("k1", "K_1(BG) exponents");
  auto* classes_alias = app.add_subcommand("psl2-classes", "same as 'psl2 classes'");
  auto* r_alias = app.add_subcommand("psl2-r", "same as 'psl2 r'");
  auto* k1_alias = app.add_subcommand("psl2-k1", "same as 'psl2 k1'");
  for (CLI::App* sub : {classes, r, k1, classes_alias, r_alias, k1_alias}) {
    add_p(sub);
    add_format(sub);
  }
  for (CLI::App* sub : {classes, classes_alias}) add_seed(sub);
  for (CLI::App* sub : {r, r_alias}) sub->add_option("-k,--k", o.k, "prime k")->required();

  auto* cheb = app.add_subcommand("cheb-sol", "Sol_k by the Chebyshev criterion");
  add_p(cheb);
  cheb->add_option("-k,--k", o.k, "odd prime k")->required();
  add_format(cheb);

  auto* homs = app.add_subcommand("homs", "brute-force Hom(Gamma, PSL_2(F_p))");
  add_p(homs);
  homs->add_option("-k,--k", o.k, "k1,k2,k3")->required();
  homs->add_flag("--count-only", o.count_only, "print only |Hom|");
  add_format(homs);
  add_seed(homs);

  auto* fell = app.add_subcommand("find-ell", "twist vector for k1,k2,k3");
  fell->add_option("-k,--k", o.k, "k1,k2,k3")->required();
  add_format(fell);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    require_formats(o);
    std::ostringstream buf;
    if (*xi) cmd_xi(o, buf);
    else if (*lens) cmd_lens(o, buf);
    else if (*bries) cmd_brieskorn(o, buf);
    else if (*classes || *classes_alias) cmd_psl2_classes(o, buf);
    else if (*r || *r_alias) cmd_psl2_r(o, buf);
    else if (*k1 || *k1_alias) cmd_psl2_k1(o, buf);
    else if (*cheb) cmd_cheb_sol(o, buf);
    else if (*homs) cmd_homs(o, buf);
    else if (*fell) cmd_find_ell(o, buf);
    out << buf.str();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.internal() ? 1 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"kdw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kdw::cli
