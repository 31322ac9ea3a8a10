#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tracefree/cover.hpp"
#include "tracefree/error.hpp"
#include "tracefree/relations.hpp"
#include "tracefree/serialize.hpp"
#include "tracefree/slice.hpp"

namespace tracefree::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit: return kResourceLimit;
    case ErrorKind::NotZeroDimensional: return kNotZeroDimensional;
    default: return kParseError;
  }
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  if (const auto* nz = dynamic_cast<const NotZeroDimensionalError*>(&e)) j["dimension"] = nz->dimension();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Runs a command body, turning library errors into exit codes. Not-zero-
// dimensional is a result, so it is reported on stdout in the requested format.
CommandResult guarded(const std::string& command, const RunConfig& config, const std::function<CommandResult()>& body) {
  try {
    check_config(config);
    return body();
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = exit_code_for(e.kind());
    if (e.kind() == ErrorKind::NotZeroDimensional) {
      Json j = error_json(e);
      j["command"] = command;
      if (config.format == "json") {
        r.out = dump(j);
      } else {
        r.out = "not zero-dimensional: dimension " + std::to_string(j.value("dimension", -1)) + "\n";
      }
    }
    r.err = std::string("tracefree ") + command + ": " + e.what() + "\n";
    return r;
  } catch (const std::invalid_argument& e) {
    return {kParseError, "", std::string("tracefree ") + command + ": " + e.what() + "\n"};
  }
}

SliceOptions slice_options(const RunConfig& config) {
  SliceOptions o;
  o.tolerance = static_cast<Real>(config.tolerance);
  o.solve.tolerance = o.tolerance;
  o.solve.groebner.max_pairs = config.gb_budget;
  o.solve.roots.precision_bits = config.precision_bits;
  o.solve.roots.seed = config.seed;
  o.solve.seed = config.seed;
  if (config.parameter) o.solve.parameter = parse_var(*config.parameter);
  if (config.pivot) {
    VarKey t = parse_var("x" + *config.pivot);
    if (t.kind != VarKey::Kind::Triple) throw Error(ErrorKind::MalformedInput, "pivot must name three indices");
    o.pivot = std::array<int, 3>{t.idx[0], t.idx[1], t.idx[2]};
  }
  return o;
}

std::string format_value(const ComplexValue& v) {
  if (v.exact) return to_string(*v.exact);
  std::ostringstream s;
  s.precision(12);
  s << static_cast<double>(v.re());
  if (v.im() != 0) s << (v.im() < 0 ? " - " : " + ") << static_cast<double>(std::fabs(v.im())) << "i";
  return s.str();
}

void append_csv_points(std::string& out, const std::string& label, const Assignment& a) {
  for (const auto& [k, v] : a) {
    std::ostringstream row;
    row.precision(17);
    row << label << ',' << k.name() << ',' << static_cast<double>(v.re()) << ',' << static_cast<double>(v.im())
        << ',' << (v.exact ? to_string(*v.exact) : "") << '\n';
    out += row.str();
  }
}

Json header(const std::string& command, const Diagram& d) {
  Json j;
  j["command"] = command;
  j["knot"] = d.label;
  j["n"] = d.n;
  return j;
}

void add_variety_summary(Json& j, const Variety& v) {
  j["dimension"] = v.dimension;
  j["multiplicity"] = v.multiplicity;
  if (v.dimension == 0 && v.eliminant.degree() >= 0) j["eliminant"] = eliminant_json(v.eliminant_variable, v.eliminant);
  j["max_residual"] = static_cast<double>(v.max_residual);
}

struct Margins {
  Real accepted = 0;
  std::optional<Real> rejected;
};

Margins margins(const std::vector<F2Point>& points) {
  Margins m;
  for (const auto& p : points) {
    if (!p.lift) continue;
    Real worst = std::max(p.lift->rectangle_residual, p.lift->hexagon_residual);
    if (p.lift->ghost) {
      Real r = *p.lift->ghost == GhostReason::Rectangle ? p.lift->rectangle_residual : p.lift->hexagon_residual;
      m.rejected = m.rejected ? std::min(*m.rejected, r) : r;
    } else {
      m.accepted = std::max(m.accepted, worst);
    }
  }
  return m;
}

Json margins_json(const Margins& m) {
  Json j;
  j["largest_accepted_residual"] = static_cast<double>(m.accepted);
  j["smallest_rejected_residual"] = m.rejected ? Json(static_cast<double>(*m.rejected)) : Json(nullptr);
  return j;
}

Integer group_order(const std::vector<Integer>& factors) {
  Integer order = 1;
  for (const auto& f : factors) order *= f;
  return order;
}

Json factors_json(const std::vector<Integer>& factors) {
  Json j = Json::array();
  for (const auto& f : factors) j.push_back(f.get_str());
  return j;
}

}  // namespace

void check_config(const RunConfig& config) {
  if (!(config.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (config.precision_bits < 1) throw std::invalid_argument("precision must be positive");
  if (config.gb_budget == 0) throw std::invalid_argument("Groebner budget must be positive");
  if (config.format != "json" && config.format != "csv" && config.format != "text") {
    throw std::invalid_argument("format must be json, csv or text");
  }
}

CommandResult cmd_ideals(const std::string& path, const std::string& which, const RunConfig& config) {
  return guarded("ideals", config, [&] {
    Diagram d = load_diagram_file(path);
    Ideal ideal;
    if (which == "f2") {
      ideal = gen_f2(d);
    } else if (which == "f3") {
      ideal = gen_f3(d);
    } else if (which == "h") {
      ideal = gen_hexagon(d.n);
    } else if (which == "r") {
      ideal = gen_rectangle(d.n);
    } else if (which == "kch") {
      ideal = gen_kch(d);
    } else {
      throw std::invalid_argument("unknown relation family '" + which + "'");
    }
    CommandResult r;
    if (config.format == "json") {
      Json j = header("ideals", d);
      j["which"] = which;
      j.update(to_json(ideal));
      r.out = dump(j);
    } else if (config.format == "csv") {
      r.out = "index,generator\n";
      for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
        r.out += std::to_string(g + 1) + "," + ideal.generators[g].to_string() + "\n";
      }
    } else {
      r.out = ideal_text(ideal);
    }
    return r;
  });
}

CommandResult cmd_f2(const std::string& path, const RunConfig& config) {
  return guarded("f2", config, [&] {
    Diagram d = load_diagram_file(path);
    F2Result f2 = compute_f2(d, slice_options(config));
    CommandResult r;
    if (config.format == "json") {
      Json j = header("f2", d);
      add_variety_summary(j, f2.variety);
      j["count"] = f2.points.size();
      Json pts = Json::array();
      for (const auto& p : f2.points) pts.push_back({{"pairs", to_json(p.coords)}});
      j["points"] = pts;
      r.out = dump(j);
    } else if (config.format == "csv") {
      r.out = "point,coordinate,re,im,exact\n";
      for (std::size_t k = 0; k < f2.points.size(); ++k) append_csv_points(r.out, std::to_string(k + 1), f2.points[k].coords);
    } else {
      std::ostringstream s;
      s << d.label << ": F2 has " << f2.points.size() << " points\n";
      s << "eliminant: " << to_string(f2.variety.eliminant, f2.variety.eliminant_variable) << "\n";
      for (std::size_t k = 0; k < f2.points.size(); ++k) {
        s << "  [" << k + 1 << "]";
        for (const auto& [key, v] : f2.points[k].coords) s << ' ' << key.name() << '=' << format_value(v);
        s << '\n';
      }
      r.out = s.str();
    }
    return r;
  });
}

CommandResult cmd_s0(const std::string& path, const RunConfig& config) {
  return guarded("s0", config, [&] {
    Diagram d = load_diagram_file(path);
    S0Result s0 = compute_s0(d, slice_options(config));
    std::size_t ghosts = 0;
    for (const auto& p : s0.f2.points) ghosts += p.lift && p.lift->ghost ? 1 : 0;
    CommandResult r;
    if (config.format == "json") {
      Json j = header("s0", d);
      add_variety_summary(j, s0.f2.variety);
      j["f2_count"] = s0.f2.points.size();
      j["s0_count"] = s0.points.size();
      j["ghost_count"] = ghosts;
      j["margins"] = margins_json(margins(s0.f2.points));
      Json f2 = Json::array();
      for (const auto& p : s0.f2.points) f2.push_back(to_json(p));
      j["f2_points"] = f2;
      Json pts = Json::array();
      for (const auto& p : s0.points) pts.push_back(to_json(p));
      j["points"] = pts;
      r.out = dump(j);
    } else if (config.format == "csv") {
      r.out = "point,coordinate,re,im,exact\n";
      for (std::size_t k = 0; k < s0.points.size(); ++k) append_csv_points(r.out, std::to_string(k + 1), s0.points[k].merged());
    } else {
      std::ostringstream s;
      s << d.label << ": F2 has " << s0.f2.points.size() << " points, S0 has " << s0.points.size() << " points, "
        << ghosts << " ghosts\n";
      for (std::size_t k = 0; k < s0.f2.points.size(); ++k) {
        s << "  F2[" << k + 1 << "] " << s0.f2.points[k].lift->status() << '\n';
      }
      r.out = s.str();
    }
    return r;
  });
}

CommandResult cmd_ghosts(const std::string& path, const RunConfig& config) {
  return guarded("ghosts", config, [&] {
    Diagram d = load_diagram_file(path);
    S0Result s0 = compute_s0(d, slice_options(config));
    CommandResult r;
    std::vector<const F2Point*> ghosts;
    for (const auto& p : s0.f2.points) {
      if (p.lift && p.lift->ghost) ghosts.push_back(&p);
    }
    if (config.format == "json") {
      Json j = header("ghosts", d);
      j["checked"] = s0.f2.points.size();
      j["count"] = ghosts.size();
      j["margins"] = margins_json(margins(s0.f2.points));
      Json list = Json::array();
      for (const auto* p : ghosts) {
        Json g = to_json(*p);
        g["reason"] = to_string(*p->lift->ghost);
        list.push_back(g);
      }
      j["ghosts"] = list;
      r.out = dump(j);
    } else if (config.format == "csv") {
      r.out = "ghost,coordinate,re,im,exact\n";
      for (std::size_t k = 0; k < ghosts.size(); ++k) append_csv_points(r.out, std::to_string(k + 1), ghosts[k]->coords);
    } else {
      std::ostringstream s;
      s << d.label << ": " << ghosts.size() << " ghost characters among " << s0.f2.points.size() << " F2 points\n";
      for (const auto* p : ghosts) s << "  " << p->lift->status() << '\n';
      r.out = s.str();
    }
    return r;
  });
}

CommandResult cmd_cover(const std::string& path, const RunConfig& config) {
  return guarded("cover", config, [&] {
    Diagram d = load_diagram_file(path);
    GroupPresentation fox = fox_presentation(d, config.drop_relator);
    std::vector<Integer> factors = abelianization(fox);
    bool finite = std::none_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 0; });
    CommandResult r;
    if (config.format == "json") {
      Json j = header("cover", d);
      j["wirtinger"] = to_json(wirtinger_presentation(d, config.drop_relator));
      j["presentation"] = to_json(fox);
      j["invariant_factors"] = factors_json(factors);
      j["order"] = finite ? Json(group_order(factors).get_str()) : Json(nullptr);
      j["trivial"] = factors.empty();
      r.out = dump(j);
    } else if (config.format == "csv") {
      r.out = "kind,value\n";
      for (const auto& rel : fox.relators) r.out += "relator," + to_string(rel) + "\n";
      for (const auto& f : factors) r.out += "factor," + f.get_str() + "\n";
    } else {
      std::ostringstream s;
      s << d.label << ": pi_1 of the 2-fold branched cover\n  generators:";
      for (const auto& g : fox.generators) s << ' ' << g.symbol << g.index;
      s << '\n';
      for (const auto& rel : fox.relators) s << "  " << to_string(rel) << '\n';
      s << "  H_1 = ";
      if (factors.empty()) s << "0 (trivial)";
      for (std::size_t k = 0; k < factors.size(); ++k) {
        s << (k ? " + " : "") << (factors[k] == 0 ? std::string("Z") : "Z/" + factors[k].get_str());
      }
      s << '\n';
      r.out = s.str();
    }
    return r;
  });
}

CommandResult cmd_census(const std::string& dir, const RunConfig& config) {
  return guarded("census", config, [&] {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw std::invalid_argument("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().filename().string().front() != '.') files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
      return a.filename().string() < b.filename().string();
    });

    SliceOptions options = slice_options(config);
    Json rows = Json::array();
    for (const auto& file : files) {
      Json row;
      row["file"] = file.filename().string();
      auto start = std::chrono::steady_clock::now();
      try {
        Diagram d = load_diagram_file(file.string());
        row["knot"] = d.label;
        row["n"] = d.n;
        S0Result s0 = compute_s0(d, options);
        std::size_t ghosts = 0;
        for (const auto& p : s0.f2.points) ghosts += p.lift && p.lift->ghost ? 1 : 0;
        std::vector<Integer> factors = abelianization(fox_presentation(d));
        row["f2"] = s0.f2.points.size();
        row["s0"] = s0.points.size();
        row["ghosts"] = ghosts;
        row["h1"] = factors_json(factors);
        bool finite = std::none_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 0; });
        row["h1_order"] = finite ? Json(group_order(factors).get_str()) : Json(nullptr);
        row["status"] = "ok";
      } catch (const Error& e) {
        row["status"] = "error";
        row["error"] = std::string(to_string(e.kind()));
        row["message"] = e.what();
        if (const auto* nz = dynamic_cast<const NotZeroDimensionalError*>(&e)) row["dimension"] = nz->dimension();
      }
      if (config.timing) {
        row["runtime_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      rows.push_back(row);
    }

    CommandResult r;
    if (config.format == "json") {
      r.out = dump(Json{{"command", "census"}, {"rows", rows}});
      return r;
    }
    auto cell = [](const Json& row, const char* key) -> std::string {
      if (!row.contains(key) || row[key].is_null()) return "";
      return row[key].is_string() ? row[key].get<std::string>() : row[key].dump();
    };
    std::ostringstream s;
    const std::vector<const char*> cols = config.timing
                                              ? std::vector<const char*>{"file", "knot", "n", "f2", "s0", "ghosts",
                                                                         "h1_order", "status", "runtime_ms"}
                                              : std::vector<const char*>{"file", "knot", "n", "f2", "s0", "ghosts",
                                                                         "h1_order", "status"};
    const char* sep = config.format == "csv" ? "," : "\t";
    for (std::size_t c = 0; c < cols.size(); ++c) s << (c ? sep : "") << cols[c];
    s << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) s << (c ? sep : "") << cell(row, cols[c]);
      s << '\n';
    }
    r.out = s.str();
    return r;
  });
}

}  // namespace tracefree::cli
