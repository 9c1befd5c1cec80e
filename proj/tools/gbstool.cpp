// Command-line front end for the GBS separability library.
//
// Exit codes: 0 = yes/true/success, 1 = no/false, 2 = unknown,
// 64 = usage error, 65 = input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <gbs/bs1n.hpp>
#include <gbs/gbs_graph.hpp>
#include <gbs/h_quotient.hpp>
#include <gbs/labeled_graph.hpp>
#include <gbs/number_theory.hpp>
#include <gbs/separability.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace gbs;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

json json_int(const Int& x) {
  static const Int kMax = Int(1) << 62;
  if (abs(x) < kMax) return json(x.convert_to<long long>());
  return json(x.str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Int parse_int(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw parse_error(std::string(what) + ": not an integer: " + text);
  }
}

Int env_or_default_bound() {
  if (const char* env = std::getenv("GBS_SEP_BOUND")) return Int(env);
  return kDefaultSearchBound;
}

const char* answer_str(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Unknown:
      return "unknown";
  }
  return "?";
}

int answer_exit(Answer a) {
  switch (a) {
    case Answer::Yes:
      return kExitYes;
    case Answer::No:
      return kExitNo;
    case Answer::Unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

json verdict_json(const Verdict& v) {
  json j;
  j["answer"] = answer_str(v.answer);
  j["reason"] = v.reason;
  if (!v.witness.empty()) {
    json w = json::object();
    for (const auto& [key, value] : v.witness) w[key] = json_int(value);
    j["witness"] = std::move(w);
  }
  if (v.bound) j["bound"] = json_int(*v.bound);
  return j;
}

int report_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_json(v).dump() << "\n";
  } else {
    std::cout << answer_str(v.answer) << " (" << v.reason;
    for (const auto& [key, value] : v.witness)
      std::cout << "; " << key << " = " << value;
    if (v.bound) std::cout << "; bound = " << *v.bound;
    std::cout << ")\n";
  }
  return answer_exit(v.answer);
}

std::string element_word(const Bs1nElement& x) {
  std::string s = x.str();
  return s.empty() ? "1" : s;
}

json element_json(const Bs1nElement& x) {
  return json{{"u", json_int(x.u)},
              {"w", json_int(x.w)},
              {"v", json_int(x.v)},
              {"word", element_word(x)}};
}

struct Options {
  bool as_json = false;
  std::string graph_path;
  std::string primes = "all";
  std::string n, r, s, smax, missing;
  std::string bound;
  std::vector<std::string> words;
  bool witness = false;
  bool brute = false;
};

Int option_bound(const Options& opt) {
  return opt.bound.empty() ? env_or_default_bound()
                           : parse_int(opt.bound, "--bound");
}

int run_gbs_classify(const Options& opt) {
  LabeledGraph g = graph_from_json(read_file(opt.graph_path));
  Classification cls = classify(reduced_positive_form(g).first);
  if (opt.as_json) {
    json j{{"class", cls.str()}};
    if (cls.kind == GbsClass::SolvableBs1n || cls.kind == GbsClass::Bs11 ||
        cls.kind == GbsClass::Bs1Minus1)
      j["n"] = json_int(cls.n);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << cls.str() << "\n";
  }
  return kExitYes;
}

int run_gbs_reduce(const Options& opt) {
  LabeledGraph g = graph_from_json(read_file(opt.graph_path));
  std::cout << graph_to_json(reduce(g), !opt.as_json) << "\n";
  return kExitYes;
}

int run_gbs_modular(const Options& opt) {
  LabeledGraph g = graph_from_json(read_file(opt.graph_path));
  auto [reduced, tree] = reduced_positive_form(g);
  ModularImage image = modular_image(reduced, tree);
  const char* cls = image.classification == ModularClass::Trivial ? "trivial"
                    : image.classification == ModularClass::PlusMinusOne
                        ? "plus-minus-one"
                        : "other";
  if (opt.as_json) {
    json gens = json::array();
    for (const auto& [edge, delta] : image.generators)
      gens.push_back(json{{"edge", edge}, {"delta", delta.str()}});
    std::cout << json{{"classification", cls}, {"generators", gens}}.dump()
              << "\n";
  } else {
    std::cout << "classification: " << cls << "\n";
    for (const auto& [edge, delta] : image.generators)
      std::cout << "delta(" << edge << ") = " << delta << "\n";
  }
  return kExitYes;
}

int run_gbs_radical(const Options& opt) {
  LabeledGraph g = graph_from_json(read_file(opt.graph_path));
  auto [reduced, tree] = reduced_positive_form(g);
  RadicalData data = cyclic_radical(reduced, tree);
  if (opt.as_json) {
    json idx = json::object();
    for (const auto& [v, m] : data.radical_exponent) idx[v] = json_int(m);
    std::cout << json{{"mu", json_int(data.mu)}, {"vertex_index", idx}}.dump()
              << "\n";
  } else {
    std::cout << "mu = " << data.mu << "\n";
    for (const auto& [v, m] : data.radical_exponent)
      std::cout << "mu(" << v << ") = " << m << "\n";
  }
  return kExitYes;
}

int run_gbs_verdict(const Options& opt, bool conjugacy) {
  LabeledGraph g = graph_from_json(read_file(opt.graph_path));
  PrimeSet p = PrimeSet::parse(opt.primes);
  Verdict v = conjugacy ? conjugacy_separable_gbs(g, p, option_bound(opt))
                        : residually_c_gbs(g, p, option_bound(opt));
  return report_verdict(v, opt.as_json);
}

int run_bs_conj(const Options& opt) {
  Bs1nGroup g(parse_int(opt.n, "--n"));
  Bs1nElement x = from_word(g, parse_bs_word(opt.words.at(0)));
  Bs1nElement y = from_word(g, parse_bs_word(opt.words.at(1)));
  auto c = find_conjugator(g, x, y);
  bool verified = false;
  if (c) verified = multiply(g, multiply(g, inverse(g, *c), x), *c) == y;
  if (opt.as_json) {
    json j{{"conjugate", c.has_value()}};
    if (c) {
      j["conjugator"] = element_json(*c);
      if (opt.witness) j["verified"] = verified;
    }
    std::cout << j.dump() << "\n";
  } else if (c) {
    std::cout << "conjugate; conjugator c = " << element_word(*c) << "\n";
    if (opt.witness)
      std::cout << "verified: c^-1 (" << element_word(x) << ") c = "
                << element_word(y) << (verified ? "" : "  [FAILED]") << "\n";
  } else {
    std::cout << "not conjugate\n";
  }
  if (c && opt.witness && !verified) return kExitInput;
  return c ? kExitYes : kExitNo;
}

int run_bs_separate(const Options& opt) {
  Bs1nGroup g(parse_int(opt.n, "--n"));
  PrimeSet p = PrimeSet::parse(opt.primes);
  Int s_max = opt.smax.empty() ? env_or_default_bound()
                               : parse_int(opt.smax, "--smax");
  Bs1nElement x = from_word(g, parse_bs_word(opt.words.at(0)));
  Bs1nElement y = from_word(g, parse_bs_word(opt.words.at(1)));
  if (are_conjugate(g, x, y)) {
    if (opt.as_json)
      std::cout << json{{"separated", false}, {"conjugate", true}}.dump() << "\n";
    else
      std::cout << "elements are conjugate; no separating quotient exists\n";
    return kExitNo;
  }
  auto G = find_separating_quotient(g, x, y, p, s_max);
  if (!G) {
    if (opt.as_json)
      std::cout << json{{"separated", false},
                        {"conjugate", false},
                        {"bound", json_int(s_max)}}
                       .dump()
                << "\n";
    else
      std::cout << "no separating quotient found with s <= " << s_max << "\n";
    return kExitUnknown;
  }
  HElement ix = natural_hom(g, *G, x);
  HElement iy = natural_hom(g, *G, y);
  if (opt.as_json) {
    std::cout << json{{"separated", true},
                      {"quotient",
                       {{"n", json_int(G->n())},
                        {"r", json_int(G->r())},
                        {"s", json_int(G->s())}}},
                      {"image1", {{"i", json_int(ix.i)}, {"j", json_int(ix.j)}}},
                      {"image2", {{"i", json_int(iy.i)}, {"j", json_int(iy.j)}}}}
                     .dump()
              << "\n";
  } else {
    std::cout << "H(" << G->n() << "," << G->r() << "," << G->s()
              << ") separates: images t^" << ix.i << " a^" << ix.j << " vs t^"
              << iy.i << " a^" << iy.j << "\n";
  }
  return kExitYes;
}

int run_bs_fusion(const Options& opt) {
  Int n = parse_int(opt.n, "--n");
  PrimeSet p = PrimeSet::parse(opt.primes);
  Int missing = parse_int(opt.missing, "--missing");
  FusionWitness f = fusion_witness(n, p, missing);
  if (opt.as_json) {
    std::cout << json{{"n", json_int(f.n)},
                      {"u", json_int(f.u)},
                      {"v", json_int(f.v)},
                      {"w", json_int(f.w)},
                      {"q", json_int(f.q)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "u=" << f.u << " v=" << f.v << " w=" << f.w << " q=" << f.q
              << "\n";
  }
  return kExitYes;
}

int run_h_conj(const Options& opt) {
  HGroup G(parse_int(opt.n, "--n"), parse_int(opt.r, "--r"),
           parse_int(opt.s, "--s"));
  HElement x = h_from_word(G, parse_bs_word(opt.words.at(0)));
  HElement y = h_from_word(G, parse_bs_word(opt.words.at(1)));
  bool conjugate = opt.brute ? h_are_conjugate_bruteforce(G, x, y)
                             : h_are_conjugate_criterion(G, x, y);
  if (opt.as_json) {
    std::cout << json{{"conjugate", conjugate},
                      {"method", opt.brute ? "bruteforce" : "criterion"}}
                     .dump()
              << "\n";
  } else {
    std::cout << (conjugate ? "conjugate" : "not conjugate") << "\n";
  }
  return conjugate ? kExitYes : kExitNo;
}

int run_num_xi(const Options& opt) {
  Int n = parse_int(opt.n, "--n");
  Int s = parse_int(opt.s, "--s");
  PrimeSet p = PrimeSet::parse(opt.primes);
  bool member = in_xi(n, s, p);
  std::optional<Int> order;
  if (s >= 1 && gcd(mod_floor(n, s), s) == 1)
    order = multiplicative_order(n, s);
  if (opt.as_json) {
    json j{{"member", member}};
    if (order) j["order"] = json_int(*order);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (member ? "true" : "false");
    if (order) std::cout << " (order = " << *order << ")";
    std::cout << "\n";
  }
  return member ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for (generalized) Baumslag-Solitar groups"};
  app.require_subcommand(1);
  Options opt;
  std::function<int(const Options&)> action;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.as_json, "machine-readable output");
  };
  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("graph", opt.graph_path, "graph JSON file")->required();
  };
  auto add_words = [&](CLI::App* cmd) {
    cmd->add_option("words", opt.words, "two group words")
        ->expected(2)
        ->required();
  };

  CLI::App* gbs_cmd = app.add_subcommand("gbs", "labeled-graph groups");
  gbs_cmd->require_subcommand(1);
  {
    CLI::App* c = gbs_cmd->add_subcommand("classify", "classify the reduced graph");
    add_graph(c);
    add_json(c);
    c->callback([&] { action = run_gbs_classify; });

    c = gbs_cmd->add_subcommand("reduce", "print the reduced graph");
    add_graph(c);
    add_json(c);
    c->callback([&] { action = run_gbs_reduce; });

    c = gbs_cmd->add_subcommand("modular", "modular homomorphism image");
    add_graph(c);
    add_json(c);
    c->callback([&] { action = run_gbs_modular; });

    c = gbs_cmd->add_subcommand("radical", "cyclic radical indices");
    add_graph(c);
    add_json(c);
    c->callback([&] { action = run_gbs_radical; });

    c = gbs_cmd->add_subcommand("residual", "residual-C verdict");
    add_graph(c);
    c->add_option("--primes", opt.primes, "prime set")->required();
    c->add_option("--bound", opt.bound, "search bound");
    add_json(c);
    c->callback([&] { action = [](const Options& o) { return run_gbs_verdict(o, false); }; });

    c = gbs_cmd->add_subcommand("conjsep", "conjugacy C-separability verdict");
    add_graph(c);
    c->add_option("--primes", opt.primes, "prime set")->required();
    c->add_option("--bound", opt.bound, "search bound");
    add_json(c);
    c->callback([&] { action = [](const Options& o) { return run_gbs_verdict(o, true); }; });
  }

  CLI::App* bs_cmd = app.add_subcommand("bs", "the groups BS(1,n)");
  bs_cmd->require_subcommand(1);
  {
    CLI::App* c = bs_cmd->add_subcommand("conj", "conjugacy with conjugator");
    c->add_option("--n", opt.n, "group base")->required();
    c->add_flag("--witness", opt.witness, "verify the conjugator");
    add_words(c);
    add_json(c);
    c->callback([&] { action = run_bs_conj; });

    c = bs_cmd->add_subcommand("separate", "find a separating finite quotient");
    c->add_option("--n", opt.n, "group base")->required();
    c->add_option("--primes", opt.primes, "prime set")->required();
    c->add_option("--smax", opt.smax, "largest modulus tried");
    add_words(c);
    add_json(c);
    c->callback([&] { action = run_bs_separate; });

    c = bs_cmd->add_subcommand("fusion", "fusion pair for a missing prime");
    c->add_option("--n", opt.n, "group base")->required();
    c->add_option("--primes", opt.primes, "prime set")->required();
    c->add_option("--missing", opt.missing, "prime outside the set")->required();
    add_json(c);
    c->callback([&] { action = run_bs_fusion; });
  }

  CLI::App* h_cmd = app.add_subcommand("h", "the finite quotients H(n,r,s)");
  h_cmd->require_subcommand(1);
  {
    CLI::App* c = h_cmd->add_subcommand("conj", "conjugacy in H(n,r,s)");
    c->add_option("--n", opt.n, "group base")->required();
    c->add_option("--r", opt.r, "order of t")->required();
    c->add_option("--s", opt.s, "order of a")->required();
    c->add_flag("--brute", opt.brute, "exhaustive check instead of the criterion");
    add_words(c);
    add_json(c);
    c->callback([&] { action = run_h_conj; });
  }

  CLI::App* num_cmd = app.add_subcommand("num", "number-theoretic predicates");
  num_cmd->require_subcommand(1);
  {
    CLI::App* c = num_cmd->add_subcommand("xi", "membership of s in Xi(n, P)");
    c->add_option("--n", opt.n, "base")->required();
    c->add_option("--s", opt.s, "modulus")->required();
    c->add_option("--primes", opt.primes, "prime set")->required();
    add_json(c);
    c->callback([&] { action = run_num_xi; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action(opt);
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
