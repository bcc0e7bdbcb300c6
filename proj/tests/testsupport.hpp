#ifndef PADICSPEC_TESTSUPPORT_HPP
#define PADICSPEC_TESTSUPPORT_HPP

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline int count_token(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

/// Runs a command line, captures stdout, returns the exit status (-1 on
/// popen failure). stderr is left alone so test logs keep it visible.
inline int run_command(const std::string& cmdline, std::string& out) {
    out.clear();
    FILE* pipe = popen(cmdline.c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// Minimal well-formedness scan: every open tag has a matching close in
/// order, attribute quotes balance, exactly one root element. Enough to
/// catch broken emission; not a general XML parser.
inline bool xml_well_formed(const std::string& doc, std::string* why = nullptr) {
    auto complain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<std::string> stack;
    int roots = 0;
    std::size_t i = 0;
    const std::size_t n = doc.size();
    while (i < n) {
        if (doc[i] != '<') {
            ++i;
            continue;
        }
        if (doc.compare(i, 4, "<!--") == 0) {
            const auto end = doc.find("-->", i + 4);
            if (end == std::string::npos) return complain("unterminated comment");
            i = end + 3;
            continue;
        }
        if (doc.compare(i, 2, "<?") == 0) {
            const auto end = doc.find("?>", i + 2);
            if (end == std::string::npos) return complain("unterminated declaration");
            i = end + 2;
            continue;
        }
        const bool closing = i + 1 < n && doc[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        std::size_t name_start = j;
        while (j < n && (std::isalnum(static_cast<unsigned char>(doc[j])) || doc[j] == ':' ||
                         doc[j] == '-' || doc[j] == '_'))
            ++j;
        const std::string name = doc.substr(name_start, j - name_start);
        if (name.empty()) return complain("empty tag name near offset " + std::to_string(i));
        bool self_closing = false;
        while (j < n && doc[j] != '>') {
            if (doc[j] == '"') {
                const auto end = doc.find('"', j + 1);
                if (end == std::string::npos) return complain("unbalanced attribute quote");
                j = end + 1;
                continue;
            }
            if (doc[j] == '/' && j + 1 < n && doc[j + 1] == '>') self_closing = true;
            ++j;
        }
        if (j >= n) return complain("unterminated tag " + name);
        i = j + 1;
        if (closing) {
            if (stack.empty() || stack.back() != name)
                return complain("mismatched close tag " + name);
            stack.pop_back();
        } else if (!self_closing) {
            if (stack.empty()) {
                if (++roots > 1) return complain("multiple root elements");
            }
            stack.push_back(name);
        } else if (stack.empty()) {
            if (++roots > 1) return complain("multiple root elements");
        }
    }
    if (!stack.empty()) return complain("unclosed tag " + stack.back());
    if (roots != 1) return complain("expected exactly one root element");
    return true;
}

/// Compares against a frozen golden file. Set PADIC_UPDATE_GOLDEN=1 to
/// rewrite goldens instead of comparing (then re-run without it).
inline bool golden_matches(const std::string& dir, const std::string& name,
                           const std::string& actual, std::string* message = nullptr) {
    const std::string path = dir + "/" + name;
    if (std::getenv("PADIC_UPDATE_GOLDEN")) {
        write_file(path, actual);
        return true;
    }
    const std::string expected = read_file(path);
    if (expected == actual) return true;
    if (message) {
        std::size_t k = 0;
        const std::size_t m = std::min(expected.size(), actual.size());
        while (k < m && expected[k] == actual[k]) ++k;
        *message = "golden mismatch for " + name + " at byte " + std::to_string(k) +
                   "\n  expected...: " + expected.substr(k, 60) +
                   "\n  actual.....: " + actual.substr(k, 60);
    }
    return false;
}

} // namespace testsupport

#endif
