// Copyright 2026 The rankone Authors. All rights reserved.
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

#include "rankone/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

namespace rankone::cli {

namespace {

const std::vector<std::string> kCommands = {"analyze", "similar", "times", "circle", "invert", "matrix", "oracle"};

std::string describe(const std::string& command) {
  if (command == "analyze") return "Gamma_+/Gamma_- of r, zero reports and structure vector";
  if (command == "similar") return "Decide similarity of U + r(x)phi and U + s(x)phi";
  if (command == "times") return "Twisted product r x s";
  if (command == "circle") return "Circle composition r o s";
  if (command == "invert") return "Circle inverse of t";
  if (command == "matrix") return "Export finite sections of U_r and K_r";
  return "Compare kernel dimensions with the closed formula";
}

class UsageError : public Error {
 public:
  using Error::Error;
};

RatFunc require(const std::optional<Json>& j, const char* name, const JobSpec& job) {
  if (!j) throw UsageError(job.command + " needs --" + name);
  try {
    return validate_in_RatD(ratfunc_from_json(*j, job.tol), job.tol);
  } catch (const PoleInDisc& e) {
    throw PoleInDisc(e.poles());
  }
}

bool is_ratfunc(const Json& j) { return j.is_object() && j.contains("poles") && j.contains("num"); }

bool is_complex(const Json& j) { return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(); }

void render_text(const Json& j, const std::string& key, int indent, std::ostream& os) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  const std::string label = key.empty() ? "" : key + ": ";
  if (is_ratfunc(j)) {
    os << pad << label << render(ratfunc_from_json(j, ToleranceConfig{})) << "\n";
  } else if (is_complex(j)) {
    os << pad << label << render_complex(complex_from_json(j)) << "\n";
  } else if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) render_text(v, k, indent + (key.empty() ? 0 : 2), os);
  } else if (j.is_array()) {
    os << pad << label << (j.empty() ? "(none)" : "") << "\n";
    int idx = 0;
    for (const auto& v : j) render_text(v, "[" + std::to_string(idx++) + "]", indent + 2, os);
  } else if (j.is_string()) {
    os << pad << label << j.get<std::string>() << "\n";
  } else {
    os << pad << label << j.dump() << "\n";
  }
}

Json ratfunc_or_null(const std::optional<RatFunc>& f, bool pretty) {
  return f ? ratfunc_to_json(*f, pretty) : Json(nullptr);
}

Json local_to_json(const LocalNilElement& el) {
  Json j;
  j["node"] = complex_to_json(el.node);
  Json c = Json::array();
  for (Complex x : el.coeffs) c.push_back(complex_to_json(x));
  j["coeffs"] = std::move(c);
  return j;
}

Json run_analyze(const JobSpec& job, const PhiContext& ctx) {
  const auto& tol = job.tol;
  const RatFunc r = require(job.r, "r", job);
  const RatFunc one = RatFunc::constant(1.0);
  Json j;
  const RatFunc gp = gamma_plus(ctx.phi(), r, tol);
  const RatFunc gm = gamma_minus_fn(ctx.phi(), r, tol);
  j["gamma_plus"] = ratfunc_to_json(gp, job.pretty);
  j["gamma_minus"] = ratfunc_to_json(gm, job.pretty);
  Json zp = Json::array();
  for (const auto& z : zeros_in_closed_disc(add(one, -gp, tol), tol)) zp.push_back(zero_to_json(z));
  j["zeros_one_minus_gamma_plus"] = std::move(zp);
  const RatFunc om = add(one, -gm, tol);
  Json pz = Json::array();
  for (const auto& z : ctx.zeros()) {
    Json e;
    e["a"] = complex_to_json(z.a);
    e["order"] = z.order;
    e["sigma"] = z.sigma;
    e["unit_residual"] = z.unit_residual;
    e["bezout_residual"] = z.bezout_residual;
    e["unit"] = ratfunc_to_json(z.e, job.pretty);
    e["gamma_minus_at_a"] = complex_to_json(gm(z.a));
    e["ord_one_minus_gamma_minus"] = std::min(z.order, ord_at(om, z.a, z.order - 1, tol).ord);
    pz.push_back(std::move(e));
  }
  j["phi_zeros"] = std::move(pz);
  const StructureVector sv = to_structure(ctx, r);
  Json st;
  st["symbol"] = ratfunc_to_json(sv.symbol, job.pretty);
  Json locals = Json::array();
  for (const auto& el : sv.locals) locals.push_back(local_to_json(el));
  st["locals"] = std::move(locals);
  j["structure"] = std::move(st);
  return j;
}

Json zero_or_null(const std::optional<ZeroDatum>& z) { return z ? zero_to_json(*z) : Json(nullptr); }

Json run_similar(const JobSpec& job, const PhiContext& ctx, int& exit_code) {
  const RatFunc r = require(job.r, "r", job);
  const RatFunc s = require(job.s, "s", job);
  const SimilarityReport rep = similar(ctx, r, s);
  Json j;
  j["verdict"] = to_string(rep.verdict);
  Json ca = Json::array();
  for (const auto& p : rep.cond_a) {
    Json row;
    row["r"] = zero_or_null(p.r);
    row["s"] = zero_or_null(p.s);
    row["ok"] = p.ok;
    row["ambiguous"] = p.ambiguous;
    ca.push_back(std::move(row));
  }
  j["cond_a"] = std::move(ca);
  Json cb = Json::array();
  for (const auto& row : rep.cond_b) {
    Json e;
    e["a"] = complex_to_json(row.a);
    e["order"] = row.order;
    e["ord_r"] = row.ord_r;
    e["ord_s"] = row.ord_s;
    e["ok"] = row.ok;
    cb.push_back(std::move(e));
  }
  j["cond_b"] = std::move(cb);
  j["witness"] = rep.witness ? ratfunc_to_json(rep.witness->t, job.pretty) : Json(nullptr);
  j["residual"] = rep.witness ? Json(rep.witness->residual) : Json(nullptr);
  if (rep.verdict == Verdict::boundary_ambiguous) exit_code = kBoundaryAmbiguous;
  return j;
}

Json run_invert(const JobSpec& job, const PhiContext& ctx, int& exit_code) {
  const RatFunc t = require(job.t, "t", job);
  const InvertibilityReport rep = is_circle_invertible(ctx, t);
  Json j;
  j["invertible"] = rep.invertible;
  j["reasons"] = rep.reasons;
  std::optional<RatFunc> inv;
  if (rep.invertible) inv = circle_inverse(ctx, t);
  j["inverse"] = ratfunc_or_null(inv, job.pretty);
  j["residual"] = inv ? Json(coefficient_norm(circle(ctx, t, *inv))) : Json(nullptr);
  if (rep.boundary_ambiguous) exit_code = kBoundaryAmbiguous;
  return j;
}

std::vector<std::pair<std::string, TruncatedOperator>> run_matrix(const JobSpec& job, const PhiContext& ctx) {
  const RatFunc r = require(job.r, "r", job);
  std::vector<std::pair<std::string, TruncatedOperator>> out;
  const bool all = job.which == "all";
  if (!all && job.which != "U_r" && job.which != "K_r" && job.which != "K_toeplitz")
    throw UsageError("--which must be U_r, K_r, K_toeplitz or all");
  if (all || job.which == "U_r") out.emplace_back("U_r", truncate_U_r(ctx, r, job.N));
  if (all || job.which == "K_r") out.emplace_back("K_r", K_matrix_via_times(ctx, r, job.N));
  if (all || job.which == "K_toeplitz") out.emplace_back("K_toeplitz", K_matrix_via_toeplitz(ctx, r, job.N));
  return out;
}

Json run_oracle(const JobSpec& job, const PhiContext& ctx) {
  const auto& tol = job.tol;
  const RatFunc r = require(job.r, "r", job);
  if (job.side != "forward" && job.side != "adjoint" && job.side != "both")
    throw UsageError("--side must be forward, adjoint or both");
  std::vector<Complex> points;
  if (job.w) {
    points.push_back(*job.w);
  } else {
    const RatFunc one = RatFunc::constant(1.0);
    auto collect = [&](const RatFunc& f) {
      try {
        for (const auto& z : zeros_in_closed_disc(f, tol))
          if (z.region == Region::interior) points.push_back(z.location);
      } catch (const IdenticallyZero&) {
      }
    };
    collect(add(one, -gamma_plus(ctx.phi(), r, tol), tol));
    for (const auto& z : ctx.zeros()) points.push_back(z.a);
    collect(add(one, -gamma_minus_fn(ctx.phi(), r, tol), tol));
  }
  Json rows = Json::array();
  bool all_agree = true;
  for (Complex w : points) {
    for (Side side : {Side::forward, Side::adjoint}) {
      if (job.side != "both" && job.side != to_string(side)) continue;
      if (side == Side::adjoint && std::abs(w) >= 1.0 - tol.delta_boundary) continue;
      for (int k = 1; k <= job.k; ++k) {
        const KernelDimReport rep = kernel_dim(ctx, r, w, k, side, job.N);
        const int formula = kernel_dim_formula(ctx, r, w, k, side);
        Json row;
        row["w"] = complex_to_json(w);
        row["side"] = to_string(side);
        row["k"] = k;
        row["kernel_dim"] = rep.dim;
        row["formula"] = formula;
        row["agree"] = rep.dim == formula && !rep.indeterminate;
        row["indeterminate"] = rep.indeterminate;
        row["method"] = rep.method;
        row["smallest_singular_values"] = rep.singular_values;
        row["tail_estimate"] = rep.tail_estimate;
        all_agree = all_agree && row["agree"].get<bool>();
        rows.push_back(std::move(row));
      }
    }
  }
  Json j;
  j["rows"] = std::move(rows);
  j["all_agree"] = all_agree;
  return j;
}

std::string render_report(const Json& report, const JobSpec& job) {
  if (job.format == "json") return (job.pretty ? report.dump(2) : report.dump()) + "\n";
  std::ostringstream os;
  render_text(report, "", 0, os);
  return os.str();
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    double im = 0.0;
    if (comma != std::string::npos) im = std::stod(text.substr(comma + 1));
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("cannot parse complex number \"" + text + "\" (expected re or re,im)");
  }
}

Json load_json_arg(const std::string& arg, const std::filesystem::path& base) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return Json::parse(arg);
  std::filesystem::path p(arg);
  if (p.is_relative()) p = base / p;
  std::ifstream in(p);
  if (!in) throw UsageError("cannot open " + p.string());
  return Json::parse(in);
}

JobSpec job_from_json(const Json& j, const std::filesystem::path& base) {
  JobSpec job;
  job.command = j.at("command").get<std::string>();
  auto fn = [&](const char* key, std::optional<Json>& slot) {
    if (!j.contains(key)) return;
    const Json& v = j.at(key);
    slot = v.is_string() ? load_json_arg(v.get<std::string>(), base) : v;
  };
  fn("phi", job.phi);
  fn("r", job.r);
  fn("s", job.s);
  fn("t", job.t);
  if (j.contains("N")) job.N = j.at("N").get<int>();
  if (j.contains("k")) job.k = j.at("k").get<int>();
  if (j.contains("w")) {
    const Json& w = j.at("w");
    job.w = w.is_string() ? parse_complex(w.get<std::string>()) : complex_from_json(w);
  }
  if (j.contains("side")) job.side = j.at("side").get<std::string>();
  if (j.contains("which")) job.which = j.at("which").get<std::string>();
  if (j.contains("format")) job.format = j.at("format").get<std::string>();
  if (j.contains("output")) {
    std::filesystem::path p(j.at("output").get<std::string>());
    job.output = (p.is_relative() ? base / p : p).string();
  }
  if (j.contains("pretty")) job.pretty = j.at("pretty").get<bool>();
  if (j.contains("tol")) {
    for (auto& [name, ptr] : job.tol.fields()) {
      if (j.at("tol").contains(name)) *ptr = j.at("tol").at(name).get<double>();
    }
  }
  return job;
}

JobResult run(const JobSpec& job) {
  JobResult res;
  try {
    if (std::find(kCommands.begin(), kCommands.end(), job.command) == kCommands.end())
      throw UsageError("unknown command \"" + job.command + "\"");
    if (job.format != "json" && job.format != "text" && job.format != "csv")
      throw UsageError("--format must be json, text or csv");
    if (job.format == "csv" && job.command != "matrix") throw UsageError("csv output is only available for matrix");
    if (job.N < 4) throw UsageError("--N must be at least 4");
    if (job.k < 0) throw UsageError("--k must be nonnegative");
    try {
      job.tol.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!job.phi) throw UsageError(job.command + " needs --phi");
    const RatFunc phi = ratfunc_from_json(*job.phi, job.tol);
    const PhiContext ctx = PhiContext::build(phi, job.tol);

    Json report;
    report["command"] = job.command;
    report["phi"] = ratfunc_to_json(phi, job.pretty);
    if (job.command == "matrix") {
      const auto mats = run_matrix(job, ctx);
      if (job.format == "csv") {
        std::ostringstream os;
        for (const auto& [name, op] : mats) os << "# matrix=" << name << "\n" << matrix_to_csv(op);
        res.report = os.str();
        return res;
      }
      for (const auto& [name, op] : mats) report[name] = matrix_to_json(op);
    } else if (job.command == "analyze") {
      report.update(run_analyze(job, ctx));
    } else if (job.command == "similar") {
      report.update(run_similar(job, ctx, res.exit_code));
    } else if (job.command == "times" || job.command == "circle") {
      const RatFunc r = require(job.r, "r", job);
      const RatFunc s = require(job.s, "s", job);
      report["result"] = ratfunc_to_json(job.command == "times" ? times(ctx, r, s) : circle(ctx, r, s), job.pretty);
    } else if (job.command == "invert") {
      report.update(run_invert(job, ctx, res.exit_code));
    } else if (job.command == "oracle") {
      report.update(run_oracle(job, ctx));
    }
    report["tolerances"] = tolerances_to_json(job.tol);
    res.report = render_report(report, job);
    if (res.exit_code == kBoundaryAmbiguous) res.message = "verdict is BOUNDARY_AMBIGUOUS";
  } catch (const PoleInDisc& e) {
    res.exit_code = kValidation;
    res.message = e.what();
  } catch (const PhiZero& e) {
    res.exit_code = kValidation;
    res.message = e.what();
  } catch (const UsageError& e) {
    res.exit_code = kValidation;
    res.message = e.what();
  } catch (const Json::exception& e) {
    res.exit_code = kValidation;
    res.message = std::string("invalid JSON input: ") + e.what();
  } catch (const BoundaryAmbiguous& e) {
    res.exit_code = kBoundaryAmbiguous;
    res.message = std::string("BOUNDARY_AMBIGUOUS: ") + e.what();
  } catch (const TruncationUnsound& e) {
    res.exit_code = kTruncationUnsound;
    res.message = std::string("truncation unsound: ") + e.what();
  } catch (const std::exception& e) {
    res.exit_code = kFailure;
    res.message = e.what();
  }
  if (res.exit_code != kOk && res.exit_code != kBoundaryAmbiguous) res.report.clear();
  return res;
}

namespace {

bool write_output(const JobSpec& job, const JobResult& res, std::ostream& out, std::ostream& err) {
  if (res.report.empty()) return true;
  if (job.output.empty()) {
    out << res.report;
    return true;
  }
  std::ofstream f(job.output, std::ios::binary);
  f << res.report;
  if (!f) {
    err << "error: cannot write " << job.output << "\n";
    return false;
  }
  return true;
}

int run_batch(const std::string& manifest, std::ostream& out, std::ostream& err) {
  std::vector<JobSpec> jobs;
  try {
    const std::filesystem::path base = std::filesystem::path(manifest).parent_path();
    const Json m = load_json_arg(manifest, std::filesystem::current_path());
    const Json& list = m.is_array() ? m : m.at("jobs");
    for (const auto& j : list) jobs.push_back(job_from_json(j, base));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  std::vector<std::future<JobResult>> futures;
  for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, [&job] { return run(job); }));
  Json summary = Json::array();
  int worst = kOk;
  for (size_t i = 0; i < jobs.size(); ++i) {
    JobResult res = futures[i].get();
    if (!res.message.empty()) err << "job " << i << ": " << res.message << "\n";
    Json entry;
    entry["index"] = i;
    entry["command"] = jobs[i].command;
    entry["exit_code"] = res.exit_code;
    if (!jobs[i].output.empty()) {
      if (!write_output(jobs[i], res, out, err)) {
        res.exit_code = kFailure;
        entry["exit_code"] = res.exit_code;
      }
      entry["output"] = jobs[i].output;
    } else if (!res.report.empty()) {
      entry["report"] = jobs[i].format == "json" ? Json::parse(res.report) : Json(res.report);
    }
    worst = std::max(worst, res.exit_code);
    summary.push_back(std::move(entry));
  }
  Json doc;
  doc["jobs"] = std::move(summary);
  out << doc.dump(2) << "\n";
  return worst;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Similarity of rank-one perturbations of the backward shift"};
  app.set_version_flag("--version", "rankone 0.1.0");
  std::string batch;
  app.add_option("--batch", batch, "Run the jobs of a JSON manifest concurrently");

  JobSpec job;
  std::string phi, r, s, t, w;
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--phi", phi, "phi: JSON file or inline object");
    sub->add_option("--r", r, "r: JSON file or inline object");
    sub->add_option("--s", s, "s: JSON file or inline object");
    sub->add_option("--t", t, "t: JSON file or inline object");
    sub->add_option("--N", job.N, "Truncation dimension")->capture_default_str();
    sub->add_option("--k", job.k, "Power / chain length")->capture_default_str();
    sub->add_option("--w", w, "Point w as re or re,im");
    sub->add_option("--side", job.side, "forward, adjoint or both")->capture_default_str();
    sub->add_option("--which", job.which, "U_r, K_r, K_toeplitz or all")->capture_default_str();
    sub->add_option("--format", job.format, "json, text or csv")->capture_default_str();
    sub->add_option("--output", job.output, "Output file (default stdout)");
    sub->add_flag("--pretty", job.pretty, "Indented JSON with human-readable renderings of functions");
    for (auto& [tname, ptr] : job.tol.fields()) {
      std::string dashed = tname;
      std::replace(dashed.begin(), dashed.end(), '_', '-');
      sub->add_option("--tol-" + dashed + ",--tol-" + tname, *ptr, "Tolerance " + tname)->capture_default_str();
    }
    sub->callback([&job, name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  if (!batch.empty()) return run_batch(batch, out, err);
  if (job.command.empty()) {
    err << app.help();
    return kValidation;
  }
  try {
    const auto cwd = std::filesystem::current_path();
    if (!phi.empty()) job.phi = load_json_arg(phi, cwd);
    if (!r.empty()) job.r = load_json_arg(r, cwd);
    if (!s.empty()) job.s = load_json_arg(s, cwd);
    if (!t.empty()) job.t = load_json_arg(t, cwd);
    if (!w.empty()) job.w = parse_complex(w);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  const JobResult res = run(job);
  if (!res.message.empty()) err << (res.exit_code == kOk ? "" : "error: ") << res.message << "\n";
  if (!write_output(job, res, out, err)) return kFailure;
  return res.exit_code;
}

}  // namespace rankone::cli
