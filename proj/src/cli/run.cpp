#include "factorinv/cli.hpp"
#include "factorinv/execution.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/kernel.hpp"
#include "factorinv/monoid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>

namespace factorinv::cli {

using nlohmann::json;

namespace {

// One printable value: its JSON form and its one-line text form.
struct Field {
  json j;
  std::string text;
};

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(to_string(v));
}

Field field(const Integer& v) { return {integer_json(v), to_string(v)}; }
Field field(const Rational& v) { return {json(to_string(v)), to_string(v)}; }
Field field(bool v) { return {json(v), v ? "true" : "false"}; }
Field field(const std::string& v) { return {json(v), v}; }

Field field(const IntVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(integer_json(x));
  return {std::move(j), to_string(v)};
}

Field list(const std::vector<Field>& items) {
  Field out{json::array(), "["};
  for (std::size_t i = 0; i < items.size(); ++i) {
    out.j.push_back(items[i].j);
    out.text += (i ? "," : "") + items[i].text;
  }
  out.text += "]";
  return out;
}

template <class T>
Field list_of(const std::vector<T>& values) {
  std::vector<Field> items;
  for (const auto& v : values) items.push_back(field(v));
  return list(items);
}

// Multi-line "key: value" text; keys sorted, like the JSON object.
Field object(const std::map<std::string, Field>& entries) {
  Field out{json::object(), ""};
  for (const auto& [key, value] : entries) {
    out.j[key] = value.j;
    out.text += (out.text.empty() ? "" : "\n") + key + ": " + value.text;
  }
  return out;
}

struct Options {
  std::string semigroup, gens, moduli, elements, element;
  std::string flavor = "plain", format = "text";
  std::optional<std::int64_t> bound, periodicity_bound;
  unsigned parallel = 1;
  std::uint64_t max_steps = 0;
  bool timing = false;
};

struct Context {
  SemigroupSpec spec;
  std::optional<AffineSemigroup> affine;
  std::optional<NumericalSemigroup> numerical;
  std::optional<IntVector> element;

  const AffineSemigroup& m() const { return *affine; }
  const NumericalSemigroup& s(const std::string& command) const {
    if (!numerical) throw InvalidArgument(command + " needs a numerical semigroup");
    return *numerical;
  }
  const IntVector& e(const std::string& command) const {
    if (!element) throw InvalidArgument(command + " needs --element");
    return *element;
  }
  // Numerical elements print as plain integers.
  Field elem(const IntVector& v) const { return numerical && v.size() == 1 ? field(v[0]) : field(v); }
  Field elems(const std::vector<IntVector>& vs) const {
    std::vector<Field> items;
    for (const auto& v : vs) items.push_back(elem(v));
    return list(items);
  }
};

struct Outcome {
  Field result;
  std::map<std::string, Field> notes;
};

template <class V>
Outcome with_witness(const Maximum<V>& best, const Context& c, bool lifted = false) {
  Outcome out{field(best.value), {}};
  if (best.at) out.notes["at"] = lifted ? field(*best.at) : c.elem(*best.at);
  return out;
}

SemigroupSpec read_spec(const Options& o) {
  const int sources = !o.semigroup.empty() + !o.gens.empty() + !o.moduli.empty();
  if (sources != 1)
    throw SpecError(SpecError::Category::Malformed, {"give exactly one of --semigroup, --gens or --moduli"});
  if (!o.elements.empty() && o.moduli.empty())
    throw SpecError(SpecError::Category::Malformed, {"--elements is only used with --moduli"});
  if (!o.semigroup.empty()) return parse_spec(o.semigroup);
  if (!o.gens.empty()) return parse_gens(o.gens);
  // Inline block monoid; the support defaults to every nonzero element.
  std::string doc = "{\"type\":\"block\",\"moduli\":[" + o.moduli + "],\"elements\":";
  if (o.elements.empty()) {
    const auto modulus_list = parse_element(o.moduli);
    if (!std::all_of(modulus_list.begin(), modulus_list.end(), [](const Integer& d) { return d >= 2; }))
      throw SpecError(SpecError::Category::Semantic, {"every modulus must be at least 2"});
    doc += "[";
    bool first = true;
    for (const auto& g : nonzero_group_elements(modulus_list.entries())) {
      doc += (first ? "" : ",") + std::string(field(g).j.dump());
      first = false;
    }
    doc += "]}";
  } else {
    const auto spec = parse_gens(o.elements.find('(') == std::string::npos ? "(" + o.elements + ")" : o.elements);
    json elements = json::array();
    for (const auto& e : spec.generators) elements.push_back(field(e).j);
    doc += elements.dump() + "}";
  }
  return parse_spec_text(doc);
}

Context build(const SemigroupSpec& spec, const Options& o) {
  Context c;
  c.spec = spec;
  switch (spec.kind) {
    case SemigroupSpec::Kind::Numerical: {
      std::vector<std::int64_t> gens;
      for (const auto& g : spec.generators) gens.push_back(to_int64(g[0]));
      c.numerical.emplace(std::move(gens));
      c.affine = c.numerical->affine();
      break;
    }
    case SemigroupSpec::Kind::Affine:
      c.affine = AffineSemigroup::from_generators(spec.generators);
      break;
    case SemigroupSpec::Kind::Equations:
      c.affine = AffineSemigroup::from_equations(IntMatrix::from_rows(spec.matrix), spec.moduli);
      break;
    case SemigroupSpec::Kind::Block:
      c.affine = block_monoid(spec.group, spec.elements);
      break;
  }
  if (!o.element.empty()) {
    c.element = parse_element(o.element);
    if (c.element->size() != c.affine->dimension())
      throw MalformedSystem("element " + to_string(*c.element) + " has " + std::to_string(c.element->size()) +
                            " entries, the semigroup lives in dimension " + std::to_string(c.affine->dimension()));
  }
  return c;
}

std::vector<IntVector> require_member(const Context& c, const IntVector& e) {
  auto z = c.m().factorizations(e);
  if (z.empty()) throw InvalidElement(to_string(e) + " is not in the semigroup");
  return z;
}

Field report_field(const InvariantReport& r) {
  std::map<std::string, Field> entries;
  for (const auto& [key, value] : r.values)
    entries[key] = std::visit(
        [](const auto& v) -> Field {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::vector<Integer>>)
            return list_of(v);
          else
            return field(v);
        },
        value);
  return object(entries);
}

using Command = std::function<Outcome(const Context&, const Options&)>;

const std::map<std::string, std::pair<std::string, Command>>& commands() {
  static const std::map<std::string, std::pair<std::string, Command>> table = {
      {"factorize",
       {"Factorizations of --element",
        [](const Context& c, const Options&) {
          const auto z = require_member(c, c.e("factorize"));
          return Outcome{list_of(z), {{"count", field(Integer(z.size()))}}};
        }}},
      {"lengths",
       {"Length set of --element",
        [](const Context& c, const Options&) {
          const auto& e = c.e("lengths");
          const auto l = c.numerical ? length_set(*c.numerical, to_int64(e[0])) : length_set(c.m(), e);
          return Outcome{list_of(l.lengths), {}};
        }}},
      {"apery",
       {"Apery set of --element (default: the multiplicity)",
        [](const Context& c, const Options&) {
          const auto& s = c.s("apery");
          const std::int64_t n = c.element ? to_int64((*c.element)[0]) : s.multiplicity();
          std::vector<Integer> values;
          for (const auto w : apery_set(s, n)) values.push_back(Integer(w));
          return Outcome{list_of(values), {{"frobenius_number", field(Integer(s.frobenius_number()))}}};
        }}},
      {"betti",
       {"Betti elements",
        [](const Context& c, const Options&) {
          if (c.numerical) {
            std::vector<Integer> values;
            for (const auto b : betti_elements(*c.numerical)) values.push_back(Integer(b));
            return Outcome{list_of(values), {}};
          }
          return Outcome{c.elems(betti_elements(c.m())), {}};
        }}},
      {"presentation",
       {"Minimal presentation",
        [](const Context& c, const Options&) {
          std::vector<Field> pairs;
          for (const auto& p : minimal_presentation(c.m()))
            pairs.push_back({json::array({field(p.lhs).j, field(p.rhs).j}), to_string(p)});
          return Outcome{list(pairs), {{"count", field(Integer(pairs.size()))}}};
        }}},
      {"primitive",
       {"Primitive elements",
        [](const Context& c, const Options&) { return Outcome{c.elems(primitive_elements(c.m())), {}}; }}},
      {"graver",
       {"Graver basis of the generator matrix",
        [](const Context& c, const Options&) {
          const auto& g = c.m().graver();
          return Outcome{list_of(g), {{"count", field(Integer(g.size()))}}};
        }}},
      {"hilbert",
       {"Hilbert basis of the defining equations, or of A x = A y for generated monoids",
        [](const Context& c, const Options&) {
          if (c.spec.kind == SemigroupSpec::Kind::Equations) {
            const auto h = hilbert_basis(IntMatrix::from_rows(c.spec.matrix), c.spec.moduli);
            return Outcome{list_of(h), {{"system", field(std::string("equations"))}}};
          }
          const IntMatrix& a = c.m().generator_matrix();
          const auto h = hilbert_basis(a.hconcat(a.negated()));
          return Outcome{list_of(h), {{"system", field(std::string("A x = A y"))}}};
        }}},
      {"circuits",
       {"Circuits of the generator matrix",
        [](const Context& c, const Options&) { return Outcome{list_of(circuits(c.m().generator_matrix())), {}}; }}},
      {"elasticity",
       {"Elasticity of --element or of the monoid",
        [](const Context& c, const Options&) {
          if (c.element) return Outcome{field(elasticity(c.m(), *c.element)), {}};
          return with_witness(elasticity(c.m()), c, true);
        }}},
      {"delta",
       {"Delta set of --element, a scan up to --bound, or min/max of the monoid",
        [](const Context& c, const Options& o) {
          if (c.element) return Outcome{list_of(delta(c.m(), *c.element)), {}};
          if (o.bound) {
            const auto scan = delta_set(c.s("delta --bound"), *o.bound, o.periodicity_bound);
            std::vector<Integer> values(scan.values.begin(), scan.values.end());
            Outcome out{list_of(values),
                        {{"scan_bound", field(Integer(scan.scan_bound))}, {"complete", field(scan.complete)}}};
            if (scan.periodicity_bound) out.notes["periodicity_bound"] = field(Integer(*scan.periodicity_bound));
            return out;
          }
          const auto lo = delta_min(c.m());
          if (!lo) return Outcome{list_of(std::vector<Integer>{}), {{"half_factorial", field(true)}}};
          const auto hi = delta_max(c.m());
          return Outcome{object({{"min", field(*lo)}, {"max", field(hi->value)}}), {{"max_at", c.elem(*hi->at)}}};
        }}},
      {"catenary",
       {"Catenary degree (--flavor) of --element or of the monoid",
        [](const Context& c, const Options& o) {
          const std::string& f = o.flavor;
          if (c.element) {
            const auto& e = *c.element;
            if (f == "plain") return Outcome{field(catenary(c.m(), e)), {}};
            if (f == "equal") return Outcome{field(equal_catenary(c.m(), e)), {}};
            if (f == "adjacent") return Outcome{field(adjacent_catenary(c.m(), e)), {}};
            if (f == "monotone") return Outcome{field(monotone_catenary(c.m(), e)), {}};
            throw InvalidArgument("the homogeneous catenary degree is defined for the monoid only");
          }
          if (f == "plain") {
            Outcome out = c.numerical ? with_witness(catenary(*c.numerical), c) : with_witness(catenary(c.m()), c);
            out.notes["path"] = field(std::string(c.numerical ? "apery" : "betti"));
            return out;
          }
          if (f == "equal") return with_witness(equal_catenary(c.m()), c, true);
          if (f == "homogeneous") return with_witness(homogeneous_catenary(c.m()), c, true);
          if (f == "monotone") return with_witness(monotone_catenary(c.m()), c);
          throw InvalidArgument("the adjacent catenary degree needs --element");
        }}},
      {"tame",
       {"Tame degree of --element or of the monoid",
        [](const Context& c, const Options&) {
          if (c.element) {
            require_member(c, *c.element);
            Integer best = 0;
            for (std::size_t i = 0; i < c.m().embedding_dimension(); ++i)
              if (c.m().contains(*c.element - c.m().generator(i))) best = std::max(best, tame(c.m(), *c.element, i));
            return Outcome{field(best), {}};
          }
          Outcome out = c.numerical ? with_witness(tame(*c.numerical), c) : with_witness(tame(c.m()), c);
          out.notes["path"] = field(std::string(c.numerical ? "apery" : "principal ideals"));
          return out;
        }}},
      {"omega",
       {"Omega-primality of --element or of the monoid",
        [](const Context& c, const Options&) {
          if (c.element)
            return Outcome{field(c.numerical ? omega(*c.numerical, to_int64((*c.element)[0])) : omega(c.m(), *c.element)),
                           {}};
          Outcome out = c.numerical ? with_witness(omega(*c.numerical), c) : with_witness(omega(c.m()), c);
          out.notes["path"] = field(std::string(c.numerical ? "apery" : "principal ideals"));
          return out;
        }}},
      {"denumerant",
       {"Denumerant of --element, or the maximal denumerant scanned up to --bound",
        [](const Context& c, const Options& o) {
          if (c.element)
            return Outcome{field(denumerant(c.m(), *c.element)),
                           {{"max_denumerant", field(max_denumerant(c.m(), *c.element))}}};
          const auto scan = max_denumerant(c.s("denumerant without --element"), o.bound);
          return Outcome{field(scan.value),
                         {{"at", field(Integer(scan.at))},
                          {"scan_bound", field(Integer(scan.scan_bound))},
                          {"bound_source", field(std::string(scan.default_bound ? "heuristic F+1+m1*me" : "--bound"))}}};
        }}},
      {"blockmonoid",
       {"Atoms of a block monoid",
        [](const Context& c, const Options&) {
          if (c.spec.kind != SemigroupSpec::Kind::Block) throw InvalidArgument("blockmonoid needs a block monoid spec");
          const auto& g = c.m().generators();
          return Outcome{list_of(g), {{"count", field(Integer(g.size()))}}};
        }}},
      {"davenport",
       {"Davenport constant of a block monoid's support",
        [](const Context& c, const Options&) {
          if (c.spec.kind != SemigroupSpec::Kind::Block) throw InvalidArgument("davenport needs a block monoid spec");
          return Outcome{field(davenport_constant(c.spec.group, c.spec.elements)), {}};
        }}},
      {"report",
       {"Full invariant battery",
        [](const Context& c, const Options&) {
          return Outcome{report_field(c.numerical ? invariant_report(*c.numerical) : invariant_report(c.m())), {}};
        }}},
  };
  return table;
}

int exit_code(std::exception_ptr e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const SpecError& x) {
    for (const auto& p : x.problems()) err << "error: " << p << "\n";
    return x.category() == SpecError::Category::Malformed ? 2 : 3;
  } catch (const MalformedSystem& x) {
    err << "error: " << x.what() << "\n";
    return 2;
  } catch (const ResourceLimitExceeded& x) {
    err << "error: " << x.what() << "\n";
    return 4;
  } catch (const Error& x) {
    err << "error: " << x.what() << "\n";
    return 3;
  } catch (const std::overflow_error& x) {
    err << "error: value out of range: " << x.what() << "\n";
    return 4;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 4;
  } catch (const std::exception& x) {
    err << "internal error: " << x.what() << "\n";
    return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization invariants of affine, numerical and block monoids", "factorinv"};
  app.require_subcommand(1, 1);
  Options o;
  auto* semigroup = app.add_option("--semigroup", o.semigroup, "Semigroup spec file (JSON)");
  auto* gens = app.add_option("--gens", o.gens, "Inline generators, \"3,5,7\" or \"(2,0),(1,1)\"");
  auto* moduli = app.add_option("--moduli", o.moduli, "Inline block monoid over Z_d1 x ... x Z_dr, \"2,2\"");
  app.add_option("--elements", o.elements, "Block monoid support, \"(0,1),(1,1)\"; default all nonzero elements");
  semigroup->excludes(gens, moduli);
  gens->excludes(moduli);
  app.add_option("--element", o.element, "Element, \"66\" or \"(2,4)\"");
  app.add_option("--flavor", o.flavor, "Catenary flavor")
      ->check(CLI::IsMember({"plain", "equal", "homogeneous", "monotone", "adjacent"}));
  app.add_option("--bound", o.bound, "Scan bound for delta and max-denumerant scans")->check(CLI::PositiveNumber);
  app.add_option("--periodicity-bound", o.periodicity_bound, "Known bound after which the Delta scan is periodic")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--parallel", o.parallel, "Worker threads for candidate maxima")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-steps", o.max_steps, "Step cap per kernel completion; 0 is unlimited");
  app.add_flag("--timing", o.timing, "Include elapsed milliseconds in the output");
  for (const auto& [name, entry] : commands()) app.add_subcommand(name, entry.first)->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();

  try {
    ScopedSettings settings({o.parallel, o.max_steps});
    const Context c = build(read_spec(o), o);
    const auto start = std::chrono::steady_clock::now();
    const Outcome result = commands().at(name).second(c, o);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    if (o.format == "json") {
      json doc;
      doc["command"] = name;
      doc["spec"] = json::parse(spec_to_json(c.spec));
      if (c.element) doc["element"] = field(*c.element).j;
      if (name == "catenary") doc["flavor"] = o.flavor;
      if (o.bound) doc["bound"] = *o.bound;
      doc["result"] = result.result.j;
      doc["notes"] = object(result.notes).j;
      if (o.timing) doc["timing_ms"] = ms.count();
      out << doc.dump(2) << "\n";
    } else {
      out << result.result.text << "\n";
      for (const auto& [key, value] : result.notes) out << key << ": " << value.text << "\n";
      if (o.timing) out << "timing_ms: " << ms.count() << "\n";
    }
    return 0;
  } catch (...) {
    return exit_code(std::current_exception(), err);
  }
}

}  // namespace factorinv::cli
