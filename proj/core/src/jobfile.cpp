#include "qres/jobfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qres/parser.hpp"

namespace qres {

namespace {

std::string trim(const std::string &s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Resolve a (possibly primed) variable name to its stable index.
size_t resolve_var(const std::string &name, const RingPtr &ring) {
  size_t idx = ring->var_index(name);
  if (idx != Ring::npos)
    return idx;
  std::string base = name;
  while (!base.empty() && base.back() == '\'')
    base.pop_back();
  idx = ring->var_index(base);
  if (idx == Ring::npos)
    fail(ErrorCategory::parse, "unknown variable '" + name + "'");
  return idx;
}

int64_t parse_int(const std::string &s, const std::string &what) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception &) {
    fail(ErrorCategory::parse, "invalid " + what + ": '" + s + "'");
  }
}

StepSpec parse_step(const std::string &line, const RingPtr &ring) {
  StepSpec step;
  bool have_center = false, have_chart = false;
  for (const auto &part : split(line, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      fail(ErrorCategory::parse, "malformed step clause '" + part + "'");
    std::string key = trim(part.substr(0, eq));
    std::string value = trim(part.substr(eq + 1));
    if (key == "center") {
      for (const auto &name : split(value, ','))
        step.center.push_back(resolve_var(name, ring));
      have_center = true;
    } else if (key == "chart") {
      step.chart_var = resolve_var(value, ring);
      have_chart = true;
    } else if (key == "a") {
      if (value == "auto") {
        step.auto_a = true;
      } else {
        step.auto_a = false;
        int64_t a = parse_int(value, "step exponent");
        if (a < 1)
          fail(ErrorCategory::parse, "step exponent must be at least 1");
        step.a = uint64_t(a);
      }
    } else {
      fail(ErrorCategory::parse, "unknown step key '" + key + "'");
    }
  }
  if (!have_center || !have_chart)
    fail(ErrorCategory::parse, "step needs both a center and a chart");
  return step;
}

} // namespace

PointSpec parse_point(const std::string &text, const RingPtr &ring) {
  std::string s = trim(text);
  if (s == "origin")
    return PointSpec::origin(ring->nvars());
  if (s.rfind("point:", 0) == 0) {
    std::vector<int64_t> coords;
    for (const auto &c : split(s.substr(6), ','))
      coords.push_back(parse_int(c, "coordinate"));
    if (coords.size() != ring->nvars())
      fail(ErrorCategory::parse, "point needs " +
                                     std::to_string(ring->nvars()) +
                                     " coordinates");
    return PointSpec::rational(std::move(coords)).normalized(ring);
  }
  if (s.rfind("generic:", 0) == 0) {
    std::vector<size_t> subset;
    for (const auto &name : split(s.substr(8), ','))
      subset.push_back(resolve_var(name, ring));
    return PointSpec::generic(std::move(subset));
  }
  fail(ErrorCategory::parse,
       "point must be 'origin', 'point:a1,...,an' or 'generic:v1,...'");
}

SequenceJob parse_job(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  bool seen_header = false;
  int64_t p = 0;
  uint32_t e = 0;
  std::vector<std::string> vars;
  std::string section;
  std::vector<std::string> module_lines, lambda_lines, L_lines, step_lines,
      point_lines, option_lines;

  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (!seen_header) {
      if (line != "qres-job v1")
        fail(ErrorCategory::parse,
             "job must start with the header 'qres-job v1'");
      seen_header = true;
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      if (section != "module" && section != "lambda" && section != "L" &&
          section != "steps" && section != "points" && section != "options")
        fail(ErrorCategory::parse, "unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        fail(ErrorCategory::parse, "expected 'key = value', got '" + line + "'");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key == "p")
        p = parse_int(value, "characteristic");
      else if (key == "e")
        e = uint32_t(parse_int(value, "exponent e"));
      else if (key == "vars")
        vars = split(value, ',');
      else
        fail(ErrorCategory::parse, "unknown header key '" + key + "'");
    } else if (section == "module")
      module_lines.push_back(line);
    else if (section == "lambda")
      lambda_lines.push_back(line);
    else if (section == "L")
      L_lines.push_back(line);
    else if (section == "steps")
      step_lines.push_back(line);
    else if (section == "points")
      point_lines.push_back(line);
    else
      option_lines.push_back(line);
  }

  if (!seen_header)
    fail(ErrorCategory::parse, "empty job file");
  if (p == 0 || e == 0 || vars.empty())
    fail(ErrorCategory::parse, "job header must set p, e, and vars");

  SequenceJob job;
  job.ring = make_ring(p, vars);
  job.e = e;
  for (const auto &src : module_lines)
    job.generators.push_back(parse_poly(src, job.ring));
  job.ctx = LogContext::trivial(job.ring);
  for (const auto &src : lambda_lines)
    for (const auto &name : split(src, ','))
      job.ctx.lambda.push_back(resolve_var(name, job.ring));
  std::sort(job.ctx.lambda.begin(), job.ctx.lambda.end());
  job.ctx.lambda.erase(
      std::unique(job.ctx.lambda.begin(), job.ctx.lambda.end()),
      job.ctx.lambda.end());
  if (!L_lines.empty()) {
    std::string all;
    for (const auto &src : L_lines)
      all += src;
    Polynomial L = parse_poly(all, job.ring);
    if (!L.is_term() || L.terms().begin()->second != 1)
      fail(ErrorCategory::parse, "L must be a single monic monomial");
    job.ctx.L = L.terms().begin()->first;
  }
  job.ctx.validate(job.ring);
  for (const auto &src : step_lines)
    job.steps.push_back(parse_step(src, job.ring));
  for (const auto &src : point_lines)
    job.query_points.push_back(parse_point(src, job.ring));
  for (const auto &src : option_lines) {
    auto eq = src.find('=');
    if (eq == std::string::npos)
      fail(ErrorCategory::parse, "malformed option '" + src + "'");
    std::string key = trim(src.substr(0, eq));
    std::string value = trim(src.substr(eq + 1));
    if (key == "rational-box")
      job.include_rational_box = value == "true";
    else
      fail(ErrorCategory::parse, "unknown option '" + key + "'");
  }
  return job;
}

SequenceJob load_job(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCategory::usage, "cannot open job file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job(buf.str());
}

} // namespace qres
