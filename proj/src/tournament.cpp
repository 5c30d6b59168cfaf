#include "tk/tournament.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace tk {

int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_vertices(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexSet make_set(const std::vector<int>& verts) {
    VertexSet s = 0;
    for (int v : verts) s |= vbit(v);
    return s;
}

std::string set_to_string(VertexSet s) {
    std::string out;
    for (int v : set_vertices(s)) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::string ArcCode::hex() const {
    int nibbles = (pair_count(n) + 3) / 4;
    static const char* digits = "0123456789abcdef";
    std::string out(static_cast<size_t>(nibbles), '0');
    for (int i = 0; i < nibbles; ++i) {
        int shift = 60 - 4 * (i % 16);
        out[i] = digits[(w[i / 16] >> shift) & 0xf];
    }
    return out;
}

ArcCode ArcCode::from_hex(int n, std::string_view hex) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    int m = pair_count(n);
    int nibbles = (m + 3) / 4;
    if (static_cast<int>(hex.size()) != nibbles)
        throw std::invalid_argument("hex length mismatch: expected " +
                                    std::to_string(nibbles) + " digits, got " +
                                    std::to_string(hex.size()));
    ArcCode c;
    c.n = static_cast<std::uint8_t>(n);
    for (int i = 0; i < nibbles; ++i) {
        char ch = hex[i];
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in arc code");
        c.w[i / 16] |= static_cast<std::uint64_t>(d) << (60 - 4 * (i % 16));
    }
    // Padding bits past the last pair must be zero for exact round trips.
    for (int k = m; k < 4 * nibbles; ++k)
        if (c.bit(k)) throw std::invalid_argument("nonzero padding bits in arc code");
    return c;
}

Tournament Tournament::linear(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    Tournament t;
    t.n_ = n;
    for (int i = 0; i < n; ++i)
        t.out_[i] = static_cast<std::uint16_t>(full_set(n) & ~full_set(i + 1));
    return t;
}

int Tournament::out_degree(int v) const { return std::popcount(out_[v]); }

void Tournament::orient(int u, int v) {
    out_[u] |= static_cast<std::uint16_t>(vbit(v));
    out_[v] &= static_cast<std::uint16_t>(~vbit(u));
}

ArcCode Tournament::code() const {
    ArcCode c;
    c.n = static_cast<std::uint8_t>(n_);
    int k = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j, ++k)
            if (arc(i, j)) c.set_bit(k);
    return c;
}

std::string Tournament::bit_string() const {
    std::string out;
    out.reserve(static_cast<size_t>(pair_count(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) out += arc(i, j) ? '1' : '0';
    return out;
}

Tournament make_tournament(int n, std::string_view arc_bits) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    if (static_cast<int>(arc_bits.size()) != pair_count(n))
        throw std::invalid_argument("arc bit count mismatch: expected " +
                                    std::to_string(pair_count(n)) + ", got " +
                                    std::to_string(arc_bits.size()));
    Tournament t;
    t.n_ = n;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            char c = arc_bits[k];
            if (c != '0' && c != '1')
                throw std::invalid_argument("arc bits must be 0/1");
            if (c == '1') t.orient(i, j);
            else t.orient(j, i);
        }
    return t;
}

Tournament from_code(const ArcCode& code) {
    Tournament t;
    t.n_ = code.n;
    int k = 0;
    for (int i = 0; i < t.n_; ++i)
        for (int j = i + 1; j < t.n_; ++j, ++k) {
            if (code.bit(k)) t.orient(i, j);
            else t.orient(j, i);
        }
    return t;
}

Tournament dual(const Tournament& t) {
    int n = t.size();
    std::string bits(static_cast<size_t>(pair_count(n)), '0');
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            bits[static_cast<size_t>(k)] = t.arc(i, j) ? '0' : '1';
    return make_tournament(n, bits);
}

Tournament restrict_to(const Tournament& t, VertexSet x) {
    if (x == 0) throw std::invalid_argument("cannot restrict to the empty set");
    if ((x & ~full_set(t.size())) != 0)
        throw std::invalid_argument("vertex out of range in restriction");
    std::vector<int> verts = set_vertices(x);
    int m = static_cast<int>(verts.size());
    std::string bits(static_cast<size_t>(pair_count(m)), '0');
    int k = 0;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b, ++k)
            bits[k] = t.arc(verts[a], verts[b]) ? '1' : '0';
    return make_tournament(m, bits);
}

Tournament lex_sum(const Tournament& shape, const std::vector<Tournament>& parts) {
    int h = shape.size();
    if (static_cast<int>(parts.size()) != h)
        throw std::invalid_argument("lex_sum: need one part per shape vertex");
    int total = 0;
    std::vector<int> offset(static_cast<size_t>(h));
    for (int x = 0; x < h; ++x) {
        offset[x] = total;
        total += parts[x].size();
    }
    if (total > kMaxVertices)
        throw std::invalid_argument("lex_sum: result exceeds vertex bound");
    std::string bits(static_cast<size_t>(pair_count(total)), '0');
    auto put = [&](int u, int v) {  // u < v, orientation u -> v
        bits[static_cast<size_t>(pair_index(u, v, total))] = '1';
    };
    for (int x = 0; x < h; ++x) {
        const Tournament& p = parts[x];
        for (int a = 0; a < p.size(); ++a)
            for (int b = a + 1; b < p.size(); ++b)
                if (p.arc(a, b)) put(offset[x] + a, offset[x] + b);
                else put(offset[x] + b, offset[x] + a);
        for (int y = x + 1; y < h; ++y)
            for (int a = 0; a < p.size(); ++a)
                for (int b = 0; b < parts[y].size(); ++b)
                    if (shape.arc(x, y)) put(offset[x] + a, offset[y] + b);
                    else put(offset[y] + b, offset[x] + a);
    }
    return make_tournament(total, bits);
}

std::string to_tk_line(const Tournament& t) {
    return "n=" + std::to_string(t.size()) + " bits=" + t.code().hex();
}

Tournament parse_tk_line(std::string_view line) {
    // strip trailing whitespace/newline
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                             line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.substr(0, 2) != "n=")
        throw std::invalid_argument("bad tournament line: expected n=<N> bits=<HEX>");
    size_t sp = line.find(' ');
    if (sp == std::string_view::npos)
        throw std::invalid_argument("bad tournament line: missing bits field");
    int n = 0;
    auto num = line.substr(2, sp - 2);
    auto res = std::from_chars(num.data(), num.data() + num.size(), n);
    if (res.ec != std::errc{} || res.ptr != num.data() + num.size())
        throw std::invalid_argument("bad vertex count in tournament line");
    auto rest = line.substr(sp + 1);
    if (rest.substr(0, 5) != "bits=")
        throw std::invalid_argument("bad tournament line: missing bits field");
    return from_code(ArcCode::from_hex(n, rest.substr(5)));
}

}  // namespace tk
