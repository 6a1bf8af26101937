#include "dwsynth/dataword.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "dwsynth/errors.hpp"

namespace dwsynth {

namespace {

bool contains_name(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void check_pool(const std::vector<std::string>& pool, const char* label) {
  for (const auto& p : pool) {
    if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        }))
      throw InputError(std::string("invalid process id '") + p + "' in pool " +
                       label);
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (pool[i] == pool[j])
        throw InputError("duplicate process id '" + pool[i] + "'");
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ProcessPools::ProcessPools(std::vector<std::string> sys,
                           std::vector<std::string> env,
                           std::vector<std::string> mixed)
    : sys_(std::move(sys)), env_(std::move(env)), mixed_(std::move(mixed)) {
  check_pool(sys_, "S");
  check_pool(env_, "E");
  check_pool(mixed_, "M");
  for (const auto& p : sys_)
    if (contains_name(env_, p) || contains_name(mixed_, p))
      throw InputError("process '" + p + "' appears in more than one pool");
  for (const auto& p : env_)
    if (contains_name(mixed_, p))
      throw InputError("process '" + p + "' appears in more than one pool");
}

bool ProcessPools::sys_playable(const std::string& process) const {
  return contains_name(sys_, process) || contains_name(mixed_, process);
}

bool ProcessPools::env_playable(const std::string& process) const {
  return contains_name(env_, process) || contains_name(mixed_, process);
}

bool ProcessPools::contains(const std::string& process) const {
  return contains_name(sys_, process) || contains_name(env_, process) ||
         contains_name(mixed_, process);
}

void validate_word(const DataWord& word, const ProcessPools& pools,
                   const Signature& sig) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Position& pos = word[i];
    if (!sig.contains(pos.action))
      throw InputError("position " + std::to_string(i) + ": action '" +
                       pos.action + "' is not in the signature");
    if (!pools.contains(pos.process))
      throw InputError("position " + std::to_string(i) + ": process '" +
                       pos.process + "' is not in any pool");
    if (sig.is_sys_action(pos.action) && !pools.sys_playable(pos.process))
      throw OwnershipError("position " + std::to_string(i) +
                           ": System action '" + pos.action +
                           "' on Environment process '" + pos.process + "'");
    if (sig.is_env_action(pos.action) && !pools.env_playable(pos.process))
      throw OwnershipError("position " + std::to_string(i) +
                           ": Environment action '" + pos.action +
                           "' on System process '" + pos.process + "'");
  }
}

ProcessPools parse_pools_spec(const std::string& text) {
  std::vector<std::string> sys, env, mixed;
  bool saw_s = false, saw_e = false, saw_m = false;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_list = [&]() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '=')
      throw InputError("pools spec: expected '='");
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '{')
      throw InputError("pools spec: expected '{'");
    ++pos;
    std::vector<std::string> names;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      std::string name;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_')) {
        name.push_back(text[pos]);
        ++pos;
      }
      if (name.empty()) throw InputError("pools spec: expected a process id");
      names.push_back(std::move(name));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != '}')
        throw InputError("pools spec: expected ',' or '}'");
      ++pos;
      break;
    }
    return names;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    const char side = text[pos];
    ++pos;
    switch (side) {
      case 'S':
        if (saw_s) throw InputError("pools spec: duplicate S pool");
        saw_s = true;
        sys = read_list();
        break;
      case 'E':
        if (saw_e) throw InputError("pools spec: duplicate E pool");
        saw_e = true;
        env = read_list();
        break;
      case 'M':
        if (saw_m) throw InputError("pools spec: duplicate M pool");
        saw_m = true;
        mixed = read_list();
        break;
      default:
        throw InputError("pools spec: expected 'S', 'E' or 'M'");
    }
  }
  return ProcessPools(std::move(sys), std::move(env), std::move(mixed));
}

std::string render_pools_spec(const ProcessPools& pools) {
  auto list = [](const std::vector<std::string>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out.push_back(',');
      out += v[i];
    }
    out += "}";
    return out;
  };
  return "S=" + list(pools.sys()) + " E=" + list(pools.env()) + " M=" +
         list(pools.mixed());
}

WordFileContents parse_word_file_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_pools = false;
  WordFileContents out;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_pools) {
      if (line.rfind("pools", 0) != 0)
        throw InputError("line " + std::to_string(lineno) +
                         ": expected `pools S={..} E={..} M={..}` header");
      out.pools = parse_pools_spec(line.substr(5));
      have_pools = true;
      continue;
    }
    std::size_t at = line.find('@');
    if (at == std::string::npos)
      throw InputError("line " + std::to_string(lineno) +
                       ": expected `action@process`");
    std::string action = trim(line.substr(0, at));
    std::string process = trim(line.substr(at + 1));
    if (action.empty() || process.empty())
      throw InputError("line " + std::to_string(lineno) +
                       ": expected `action@process`");
    out.word.push_back({std::move(action), std::move(process)});
  }
  if (!have_pools)
    throw InputError("word file has no `pools` header");
  return out;
}

WordFileContents load_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open word file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_word_file_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render_word_file(const DataWord& word,
                             const ProcessPools& pools) {
  std::string out = "pools " + render_pools_spec(pools) + "\n";
  for (const auto& pos : word) out += pos.action + "@" + pos.process + "\n";
  return out;
}

}  // namespace dwsynth
