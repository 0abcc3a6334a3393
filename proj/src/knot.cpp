#include "warpmat/knot.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace warpmat {

namespace {

void check_double_occurrence(const std::vector<int>& ids, int c) {
    std::vector<int> seen(static_cast<std::size_t>(c) + 1, 0);
    for (int id : ids) {
        if (id < 1 || id > c) {
            throw Error("crossing id " + std::to_string(id) + " outside 1.." + std::to_string(c));
        }
        ++seen[id];
    }
    for (int id = 1; id <= c; ++id) {
        if (seen[id] != 2) {
            throw Error("crossing " + std::to_string(id) + " appears " + std::to_string(seen[id]) +
                        " times, expected 2");
        }
    }
}

std::vector<int> first_appearance_relabeling(const std::vector<int>& word, int c) {
    std::vector<int> relabel(static_cast<std::size_t>(c) + 1, 0);
    int next = 1;
    for (int id : word) {
        if (relabel[id] == 0) relabel[id] = next++;
    }
    return relabel;
}

}  // namespace

OrientedKnotDiagram::OrientedKnotDiagram(std::vector<Visit> visits, std::vector<Sign> signs)
    : visits_(std::move(visits)), signs_(std::move(signs)) {
    const int c = static_cast<int>(signs_.size());
    if (visits_.size() != 2 * signs_.size()) {
        throw Error("diagram has " + std::to_string(visits_.size()) + " visits but " + std::to_string(c) +
                    " signs");
    }
    std::vector<int> ids;
    ids.reserve(visits_.size());
    for (const auto& v : visits_) ids.push_back(v.crossing);
    check_double_occurrence(ids, c);

    std::vector<int> overs(static_cast<std::size_t>(c) + 1, 0);
    for (const auto& v : visits_) {
        if (v.strand == Strand::Over) ++overs[v.crossing];
    }
    for (int id = 1; id <= c; ++id) {
        if (overs[id] != 1) {
            throw Error("crossing " + std::to_string(id) + " must be passed once over and once under");
        }
    }
}

Sign OrientedKnotDiagram::sign(int crossing) const {
    if (crossing < 1 || crossing > crossings()) throw Error("unknown crossing " + std::to_string(crossing));
    return signs_[crossing - 1];
}

int OrientedKnotDiagram::negative_crossings() const noexcept {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), Sign::Negative));
}

KnotProjection::KnotProjection(std::vector<int> word) : word_(std::move(word)) {
    if (word_.size() % 2 != 0) throw Error("projection word must have even length");
    check_double_occurrence(word_, crossings());
}

OrientedKnotDiagram parse_gauss_code(std::string_view text) {
    struct Token {
        Visit visit;
        Sign sign;
    };
    std::vector<Token> tokens;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("gauss code: " + what + " at offset " + std::to_string(pos));
    };
    while (pos < text.size()) {
        Token tok{};
        const char s = text[pos];
        if (s == 'O' || s == 'o') {
            tok.visit.strand = Strand::Over;
        } else if (s == 'U' || s == 'u') {
            tok.visit.strand = Strand::Under;
        } else {
            fail("expected 'O' or 'U'");
        }
        ++pos;
        const std::size_t digits = pos;
        long id = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            id = id * 10 + (text[pos] - '0');
            if (id > 1'000'000) fail("crossing id too large");
            ++pos;
        }
        if (pos == digits) fail("expected crossing id");
        tok.visit.crossing = static_cast<int>(id);
        if (pos < text.size() && text[pos] == '+') {
            tok.sign = Sign::Positive;
            ++pos;
        } else if (pos < text.size() && text[pos] == '-') {
            tok.sign = Sign::Negative;
            ++pos;
        } else if (text.substr(pos, 3) == "\xE2\x88\x92") {
            tok.sign = Sign::Negative;
            pos += 3;
        } else {
            fail("expected sign '+' or '-'");
        }
        tokens.push_back(tok);
    }

    if (tokens.size() % 2 != 0) throw ParseError("gauss code: odd number of visits");
    const int c = static_cast<int>(tokens.size() / 2);
    std::vector<Visit> visits;
    std::vector<int> ids;
    for (const auto& t : tokens) {
        visits.push_back(t.visit);
        ids.push_back(t.visit.crossing);
    }
    try {
        check_double_occurrence(ids, c);
    } catch (const Error& e) {
        throw ParseError(std::string("gauss code: ") + e.what());
    }

    std::vector<Sign> signs(static_cast<std::size_t>(c), Sign::Positive);
    std::vector<int> sign_seen(static_cast<std::size_t>(c) + 1, 0);
    std::vector<int> strand_seen(static_cast<std::size_t>(c) + 1, -1);
    for (const auto& t : tokens) {
        const int id = t.visit.crossing;
        if (sign_seen[id] && signs[id - 1] != t.sign) {
            throw ParseError("gauss code: crossing " + std::to_string(id) + " has inconsistent signs");
        }
        signs[id - 1] = t.sign;
        sign_seen[id] = 1;
        const int strand = static_cast<int>(t.visit.strand);
        if (strand_seen[id] == strand) {
            throw ParseError("gauss code: crossing " + std::to_string(id) + " passed " +
                             (t.visit.strand == Strand::Over ? "over" : "under") + " twice");
        }
        strand_seen[id] = strand;
    }
    return OrientedKnotDiagram(std::move(visits), std::move(signs));
}

std::string format_gauss_code(const OrientedKnotDiagram& d) {
    std::string out;
    for (const auto& v : d.visits()) {
        out += v.strand == Strand::Over ? 'O' : 'U';
        out += std::to_string(v.crossing);
        out += d.sign(v.crossing) == Sign::Positive ? '+' : '-';
    }
    return out;
}

nlohmann::json to_json(const OrientedKnotDiagram& d) {
    auto visits = nlohmann::json::array();
    for (const auto& v : d.visits()) {
        visits.push_back({{"id", v.crossing},
                          {"strand", v.strand == Strand::Over ? "over" : "under"},
                          {"sign", static_cast<int>(d.sign(v.crossing))}});
    }
    return {{"visits", visits}};
}

OrientedKnotDiagram diagram_from_json(const nlohmann::json& j) {
    try {
        const auto& arr = j.at("visits");
        if (!arr.is_array() || arr.size() % 2 != 0) throw ParseError("diagram json: visits must be an even array");
        const int c = static_cast<int>(arr.size() / 2);
        std::vector<Visit> visits;
        std::vector<Sign> signs(static_cast<std::size_t>(c), Sign::Positive);
        std::vector<int> sign_seen(static_cast<std::size_t>(c) + 1, 0);
        for (const auto& v : arr) {
            Visit visit;
            visit.crossing = v.at("id").get<int>();
            const auto strand = v.at("strand").get<std::string>();
            if (strand == "over") {
                visit.strand = Strand::Over;
            } else if (strand == "under") {
                visit.strand = Strand::Under;
            } else {
                throw ParseError("diagram json: strand must be \"over\" or \"under\"");
            }
            const int s = v.at("sign").get<int>();
            if (s != 1 && s != -1) throw ParseError("diagram json: sign must be 1 or -1");
            if (visit.crossing < 1 || visit.crossing > c) {
                throw ParseError("diagram json: crossing id out of range");
            }
            const Sign sign = s == 1 ? Sign::Positive : Sign::Negative;
            if (sign_seen[visit.crossing] && signs[visit.crossing - 1] != sign) {
                throw ParseError("diagram json: inconsistent signs for crossing " + std::to_string(visit.crossing));
            }
            sign_seen[visit.crossing] = 1;
            signs[visit.crossing - 1] = sign;
            visits.push_back(visit);
        }
        return OrientedKnotDiagram(std::move(visits), std::move(signs));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("diagram json: ") + e.what());
    }
}

int warping_degree(const OrientedKnotDiagram& d, EdgeIndex base) {
    const int n = d.length();
    if (base.index < 0 || base.index >= std::max(n, 1)) {
        throw Error("edge index " + std::to_string(base.index) + " out of range");
    }
    std::vector<char> met(static_cast<std::size_t>(d.crossings()) + 1, 0);
    int degree = 0;
    for (int k = 0; k < n; ++k) {
        const Visit& v = d.visits()[(base.index + k) % n];
        if (met[v.crossing]) continue;
        met[v.crossing] = 1;
        if (v.strand == Strand::Under) ++degree;
    }
    return degree;
}

LabeledSequence warping_labels(const OrientedKnotDiagram& d) {
    const int n = d.length();
    LabeledSequence labels(static_cast<std::size_t>(n));
    if (n == 0) return labels;
    int value = warping_degree(d, EdgeIndex{0});
    for (int j = 0; j < n; ++j) {
        labels[j].value = value;
        value += d.visits()[j].strand == Strand::Over ? 1 : -1;
    }
    return labels;
}

LabeledSequence signed_labels(const OrientedKnotDiagram& d) {
    auto labels = warping_labels(d);
    const int n = d.length();
    for (int j = 0; j < n; ++j) {
        const Visit& v = d.visits()[j];
        if (v.strand == Strand::Over && d.sign(v.crossing) == Sign::Negative) {
            labels[(j + 1) % n].bar = true;
        }
    }
    return labels;
}

OrientedKnotDiagram crossing_change(const OrientedKnotDiagram& d, int crossing) {
    if (crossing < 1 || crossing > d.crossings()) throw Error("unknown crossing " + std::to_string(crossing));
    auto visits = d.visits();
    for (auto& v : visits) {
        if (v.crossing == crossing) v.strand = opposite(v.strand);
    }
    auto signs = d.signs();
    signs[crossing - 1] = opposite(signs[crossing - 1]);
    return OrientedKnotDiagram(std::move(visits), std::move(signs));
}

OrientedKnotDiagram change_all_crossings(const OrientedKnotDiagram& d) {
    auto visits = d.visits();
    for (auto& v : visits) v.strand = opposite(v.strand);
    auto signs = d.signs();
    for (auto& s : signs) s = opposite(s);
    return OrientedKnotDiagram(std::move(visits), std::move(signs));
}

KnotProjection underlying_projection(const OrientedKnotDiagram& d) {
    std::vector<int> word;
    word.reserve(d.visits().size());
    for (const auto& v : d.visits()) word.push_back(v.crossing);
    return KnotProjection(std::move(word));
}

OrientedKnotDiagram apply_assignment(const KnotProjection& p, const OrientedKnotDiagram& reference,
                                     CrossingMask mask) {
    if (underlying_projection(reference) != p) {
        throw Error("reference diagram does not project to the given projection");
    }
    const int c = reference.crossings();
    if (c < 64 && (mask >> c) != 0) throw Error("assignment mask has bits beyond crossing count");
    auto visits = reference.visits();
    auto signs = reference.signs();
    for (auto& v : visits) {
        if ((mask >> (v.crossing - 1)) & 1U) v.strand = opposite(v.strand);
    }
    for (int i = 0; i < c; ++i) {
        if ((mask >> i) & 1U) signs[i] = opposite(signs[i]);
    }
    return OrientedKnotDiagram(std::move(visits), std::move(signs));
}

OrientedKnotDiagram normalized(const OrientedKnotDiagram& d) {
    const auto relabel = first_appearance_relabeling(underlying_projection(d).word(), d.crossings());
    auto visits = d.visits();
    std::vector<Sign> signs(d.signs().size(), Sign::Positive);
    for (auto& v : visits) {
        signs[relabel[v.crossing] - 1] = d.sign(v.crossing);
        v.crossing = relabel[v.crossing];
    }
    return OrientedKnotDiagram(std::move(visits), std::move(signs));
}

KnotProjection normalized(const KnotProjection& p) {
    const auto relabel = first_appearance_relabeling(p.word(), p.crossings());
    auto word = p.word();
    for (auto& id : word) id = relabel[id];
    return KnotProjection(std::move(word));
}

OrientedKnotDiagram rotated(const OrientedKnotDiagram& d, int shift) {
    auto visits = d.visits();
    if (!visits.empty()) {
        const int n = static_cast<int>(visits.size());
        std::rotate(visits.begin(), visits.begin() + ((shift % n) + n) % n, visits.end());
    }
    return OrientedKnotDiagram(std::move(visits), d.signs());
}

bool same_diagram(const OrientedKnotDiagram& a, const OrientedKnotDiagram& b) {
    if (a.length() != b.length()) return false;
    const auto na = normalized(a);
    if (a.length() == 0) return true;
    for (int s = 0; s < b.length(); ++s) {
        if (normalized(rotated(b, s)) == na) return true;
    }
    return false;
}

bool same_projection(const KnotProjection& a, const KnotProjection& b) {
    if (a.word().size() != b.word().size()) return false;
    const auto na = normalized(a);
    const int n = static_cast<int>(b.word().size());
    if (n == 0) return true;
    for (int s = 0; s < n; ++s) {
        auto w = b.word();
        std::rotate(w.begin(), w.begin() + s, w.end());
        if (normalized(KnotProjection(std::move(w))) == na) return true;
    }
    return false;
}

std::string to_string(const LabeledSequence& s) {
    std::ostringstream out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j) out << ' ';
        out << s[j].value;
        if (s[j].bar) out << '-';
    }
    return out.str();
}

}  // namespace warpmat
