#include "mollow/constants.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mollow {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool to_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) + ": empty key or value");
        kv[key] = val;
    }
    return kv;
}

std::map<std::string, std::string> load_key_values(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_key_values(ss.str());
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    if (!to_double(trim(text), v)) throw std::runtime_error("config: bad number for " + key + ": " + text);
    return v;
}

// "value" or "value sigma".
UncertainValue parse_uncertain(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    std::string a, b, extra;
    in >> a >> b >> extra;
    if (!extra.empty()) throw std::runtime_error("config: too many fields for " + key);
    double v = parse_double(key, a);
    double s = b.empty() ? 0.0 : parse_double(key, b);
    if (s < 0.0) throw std::runtime_error("config: negative sigma for " + key);
    return {v, s};
}

}  // namespace mollow
