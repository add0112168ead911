#include "g2rc/bijection.hpp"

#include <algorithm>
#include <sstream>

namespace g2rc::bij {

using rc::eff;
using rc::type_of;

bool MString::marked(int n) const {
    return std::find(marks.begin(), marks.end(), n) != marks.end();
}

MarkingState init_state(const RiggedConfig& r) {
    MarkingState st;
    Configuration c = r.shape();
    for (int a : {1, 2})
        for (const auto& s : r.nu(a)) st.tab(a).push_back({s.len, s.rig, rc::vacancy(c, a, s.len), {}, false});
    return st;
}

namespace {

constexpr Letter kFail = 0;

struct Engine {
    MarkingState& st;

    void note(const std::string& s) { st.log.push_back(s); }

    int col2() const { return st.has(2) ? st.str(2).len : 0; }

    // Whether the next free box of the string may take a mark.
    bool allowed(int a, int idx) const {
        const auto& s = st.tab(a)[idx];
        if (s.free() <= 0 || s.inactive) return false;
        if (a == 1) {
            int col = s.free();
            if (st.has(1) && s.len <= 3 * (st.i[1] - 1)) return false;
            // nothing north or northwest of [2]
            if (st.has(2) && idx != st.at[2].idx && s.len >= st.str(2).len && col <= col2()) return false;
        }
        return true;
    }

    void place(int n, int a, int idx) {
        auto& s = st.tab(a)[idx];
        s.marks.push_back(n);
        last = n;
        st.at[n] = {a, idx};
        st.i[n] = s.len;
        std::ostringstream os;
        os << "[" << n << "] nu" << a << " len=" << s.len << " rig=" << s.rig << " p=" << s.vac << " col=" << s.free() + 1;
        note(os.str());
    }

    void unplace(int n) {
        auto w = st.at[n];
        auto& s = st.tab(w.a)[w.idx];
        if (s.marks.empty() || s.marks.back() != n) throw RuleError("cannot lift mark " + std::to_string(n));
        s.marks.pop_back();
        st.at[n] = {};
        st.i[n] = 0;
        last = n - 1;
        note("lift [" + std::to_string(n) + "]");
    }

    // Mark the box on the left of [k] by [n].
    bool place_left(int n, int k) {
        auto w = st.at[k];
        const auto& s = st.tab(w.a)[w.idx];
        if (s.marks.empty() || s.marks.back() != k || !allowed(w.a, w.idx)) {
            note("cannot mark [" + std::to_string(n) + "] left of [" + std::to_string(k) + "]");
            return false;
        }
        place(n, w.a, w.idx);
        return true;
    }

    int last = 0;     // label of the latest mark
    int prefer = -1;  // string index winning ties, if any

    // Shortest string satisfying pred.  Ties: lower class, then a string whose
    // last mark is the latest one, then unmarked strings.
    // fresh: the string must carry no marks ("rightmost box"); otherwise any free box.
    template <class Pred>
    int find(int a, bool fresh, Pred pred) const {
        const auto& t = st.tab(a);
        int best = -1;
        auto key = [&](int k) {
            const auto& s = t[k];
            int chain = k == prefer ? -1 : s.marks.empty() ? 1 : (s.marks.back() == last ? 0 : 2);
            return std::tuple(s.len, s.cls(), chain, s.rig);
        };
        for (int k = 0; k < int(t.size()); ++k) {
            const auto& s = t[k];
            if (fresh && !s.marks.empty()) continue;
            if (!allowed(a, k)) continue;
            if (!pred(s)) continue;
            if (best < 0 || key(k) < key(best)) best = k;
        }
        return best;
    }

    bool exists1(int e, int type, int cls) const {
        for (const auto& s : st.tab(1))
            if (eff(s.len) == e && type_of(s.len) == type && s.cls() == cls) return true;
        return false;
    }

    // An unmarked singular string of the given length in nu^(2).
    bool singular2(int len) const {
        for (const auto& s : st.tab(2))
            if (s.marks.empty() && s.len == len && s.cls() == 0) return true;
        return false;
    }

    // The preferential search of [2], reused by [7] with base i6.
    bool mark_like2(int base, int n) {
        static constexpr std::pair<int, int> pref[] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
        for (auto [cls, type] : pref) {
            int len = 3 * base - (type == 0 ? 0 : type == 1 ? 1 : 2);
            int k = find(1, true, [&](const MString& s) { return s.len == len && s.cls() == cls; });
            if (k >= 0) {
                place(n, 1, k);
                return true;
            }
        }
        auto ignored = [&](const MString& s) {
            int e = eff(s.len), t = type_of(s.len), c = s.cls();
            if (t == 2 && c == 2 && (exists1(e, 1, 0) || exists1(e, 0, 0))) return true;
            if (t == 1 && c == 1 && exists1(e, 0, 0)) return true;
            if (t == 1 && c == 2 && (exists1(e, 0, 0) || exists1(e, 0, 1))) return true;
            return false;
        };
        int k = find(1, true, [&](const MString& s) { return s.len >= 3 * base + 1 && s.cls() <= 2 && !ignored(s); });
        if (k < 0) return false;
        place(n, 1, k);
        return true;
    }

    // The [3]-rule relative to the string of [m2]; reused by [8] with base i6.
    bool mark_like3(int base, int m2, int m3) {
        const MString s2 = st.str(m2);
        int i2 = s2.len, c2 = s2.cls();
        auto search = [&](int floor) {
            int k = find(1, true, [&](const MString& s) { return s.len >= floor && s.cls() <= 1; });
            if (k < 0) return false;
            place(m3, 1, k);
            return true;
        };
        if (i2 == 3 * base - 2) {
            int k = find(1, true, [&](const MString& s) { return s.len == 3 * base && s.cls() == 1; });
            if (k >= 0) {
                place(m3, 1, k);
                return true;
            }
            return search(3 * base + 1);
        }
        if (i2 == 3 * base - 1) {
            if (c2 == 0) return place_left(m3, m2);
            if (c2 == 1) return search(3 * base + 1);
            throw RuleError("[" + std::to_string(m2) + "] on a type-I string of class " + std::to_string(c2));
        }
        if (i2 < 3 * base - 2) throw RuleError("[" + std::to_string(m2) + "] below the effective floor");
        // i2 >= 3 base
        if (c2 == 2 && type_of(i2) == 0) {
            int k = find(1, true, [&](const MString& s) { return s.len == i2 + 1 && s.cls() == 0; });
            if (k >= 0) {
                note("qq type-0 selection replaced by the singular string one longer");
                unplace(m2);
                place(m2, 1, k);
                place(m3, 1, k);
                return true;
            }
        }
        if (c2 <= 1) return place_left(m3, m2);
        return search(i2 + 1);
    }

    // Boomerang strings for the [2] selection.
    void boomerang2() {
        const MString s2 = st.str(2);
        int t = type_of(s2.len), c = s2.cls(), e = eff(s2.len);
        int k = -1;
        if (t == 2 && c == 1) {
            if (singular2(e))
                k = find(1, true, [&](const MString& s) { return s.cls() == 0 && type_of(s.len) != 2 && eff(s.len) == e; });
        } else if ((t != 2 && c == 1) || (t == 1 && c == 2)) {
            bool two = singular2(e) || singular2(e + 1), zero = singular2(e + 1);
            k = find(1, true, [&](const MString& s) {
                if (s.cls() != 0 || eff(s.len) != e + 1) return false;
                return type_of(s.len) == 2 ? two : zero;
            });
        } else if (t == 0 && c == 2) {
            bool typeII = find(1, true, [&](const MString& s) { return s.len == s2.len + 1 && s.cls() == 0; }) >= 0;
            if (!typeII && singular2(e + 1))
                k = find(1, true, [&](const MString& s) { return s.cls() == 0 && type_of(s.len) != 2 && eff(s.len) == e + 1; });
        }
        if (k >= 0) {
            note("boomerang for [2]");
            unplace(2);
            place(2, 1, k);
        }
    }

    void boomerang3() {
        if (st.in(3) != 1 || st.at[3].idx == st.at[2].idx) return;
        const MString s3 = st.str(3);
        int t = type_of(s3.len), c = s3.cls(), e = eff(s3.len);
        if (c != 1) return;
        int k = -1;
        if (t == 2) {
            if (singular2(e))
                k = find(1, true, [&](const MString& s) { return s.cls() == 0 && type_of(s.len) != 2 && eff(s.len) == e; });
        } else if (singular2(e + 1)) {
            k = find(1, true, [&](const MString& s) { return s.cls() == 0 && eff(s.len) == e + 1; });
        }
        if (k >= 0) {
            note("boomerang for [3]");
            unplace(3);
            place(3, 1, k);
        }
    }

    void boomerang5() {
        if (st.in(5) != 1 || st.i[5] <= st.i[3]) return;
        const MString s5 = st.str(5);
        int t = type_of(s5.len), e = eff(s5.len);
        if (s5.cls() != 1 || t == 0 || !singular2(e)) return;
        int k = find(1, true, [&](const MString& s) { return s.cls() == 0 && s.len > s5.len && eff(s.len) == e; });
        if (k >= 0) {
            note("boomerang for [5]");
            unplace(5);
            place(5, 1, k);
        }
    }

    // l4 comparison between nu^(2) and nu^(1) candidates.
    bool mark4_compare() {
        const MString s3 = st.str(3);
        int e3 = eff(s3.len);
        int k2 = find(2, true, [&](const MString& s) { return s.cls() == 0 && s.len >= e3; });
        int k1 = find(1, true, [&](const MString& s) { return s.cls() == 0 && s.len >= s3.len + 1; });
        if (k1 < 0 && k2 < 0) return false;
        long l2 = k2 >= 0 ? st.tab(2)[k2].len : 1L << 30;
        long l1 = k1 >= 0 ? eff(st.tab(1)[k1].len) : 1L << 30;
        if (l1 >= l2)
            place(4, 2, k2);
        else
            place(4, 1, k1);
        return true;
    }

    bool mark4() {
        const MString s3 = st.str(3);
        int t = type_of(s3.len), c = s3.cls(), e = eff(s3.len);
        if (c == 0) {
            if (t == 0) return place_left(4, 3);
            if (t == 1) return e > st.i[1] ? place_left(4, 3) : mark4_compare();
            for (int len : {e - 1, e}) {
                if (len < 1) continue;
                int k = find(2, true, [&](const MString& s) { return s.cls() == 0 && s.len == len; });
                if (k >= 0) {
                    place(4, 2, k);
                    return true;
                }
            }
            return place_left(4, 3);
        }
        if (c != 1) throw RuleError("[3] on a string of class " + std::to_string(c));
        if (!mark4_compare()) return false;
        if (st.in(4) == 1 && st.at[4].idx != st.at[3].idx) {
            const MString s4 = st.str(4);
            if (type_of(s4.len) == 0 && t == 1 && eff(s4.len) == e) {
                note("type-I [3] selection replaced by the type-0 [4] string");
                int k = st.at[4].idx;
                unplace(4);
                unplace(3);
                place(3, 1, k);
                place(4, 1, k);
            }
        }
        return true;
    }

    Letter run() {
        int k = find(2, true, [](const MString& s) { return s.cls() == 0; });
        if (k < 0) return 1;
        place(1, 2, k);

        if (!mark_like2(st.i[1], 2)) return 2;
        boomerang2();

        if (!mark_like3(st.i[1], 2, 3)) return 3;
        boomerang3();

        if (!mark4()) return 4;

        if (st.in(4) == 1) {
            int e4 = eff(st.i[4]);
            k = find(2, true, [&](const MString& s) { return s.cls() <= 1 && s.len >= e4; });
            if (k < 0) return 6;
            const auto& s = st.tab(2)[k];
            if (s.cls() == 0 && s.len == 1) {
                place(5, 2, k);
                return kEmpty;
            }
            place(5, 2, k);
        } else {
            int i4 = st.i[4];
            const MString* s3 = st.in(3) == 1 ? &st.str(3) : nullptr;
            // at effective length i4: no q-singular type-I/II string, and no type-I left of [3]
            auto ok = [&](const MString& s) {
                if (s.cls() > 1 || eff(s.len) < i4) return false;
                if (s3 && s.len < s3->len) return false;
                if (eff(s.len) != i4) return true;
                return s.cls() == 1 ? type_of(s.len) == 0 : !(&s == s3 && type_of(s.len) == 1);
            };
            k = find(1, false, ok);
            // continuing the [3]-string wins
            if (s3 && allowed(1, st.at[3].idx) && ok(*s3)) k = st.at[3].idx;
            if (k < 0) return 5;
            place(5, 1, k);
            boomerang5();
        }

        {
            int a = st.in(5);
            Letter fail = a == 1 ? 7 : 8;
            const MString s5 = st.str(5);
            if (s5.cls() == 1) {
                k = find(a, true, [&](const MString& s) { return s.cls() == 0 && s.len >= s5.len + 1; });
                if (k < 0) return fail;
                place(6, a, k);
            } else if (!place_left(6, 5)) {
                return fail;
            }
        }

        if (st.in(6) == 1) {
            int e6 = eff(st.i[6]);
            // [7] may continue a string carrying [4] only, preferably so
            if (st.in(4) == 2) prefer = st.at[4].idx;
            k = find(2, false, [&](const MString& s) {
                return s.cls() == 0 && s.len >= e6 && (s.marks.empty() || s.marks == std::vector<int>{4});
            });
            prefer = -1;
            if (k < 0) return 9;
            place(7, 2, k);
        } else {
            int i6 = st.i[6];
            bool done = false;
            if (st.in(4) == 1) {
                const MString s4 = st.str(4);
                if (eff(s4.len) == i6 && type_of(s4.len) != 2) {
                    if (!place_left(7, 4)) return 10;
                    done = true;
                }
            }
            if (!done && !mark_like2(i6, 7)) return 10;
        }

        if (st.in(7) == 1) {
            const MString s7 = st.str(7);
            if (s7.marked(4)) {
                if (!place_left(8, 7)) return 11;
                auto& s = st.tab(1)[st.at[7].idx];
                if (type_of(s.len) == 1 && s.rightmost_mark() == 3) {
                    s.inactive = true;
                    note("inactivated");
                }
            } else if (!mark_like3(st.i[6], 7, 8)) {
                return 11;
            }
        } else {
            int i7 = st.i[7];
            static constexpr std::pair<int, int> pref[] = {{0, 0}, {0, 1}, {1, 0}};
            k = -1;
            // the [6]-string goes first when it qualifies
            if (st.in(6) == 1 && allowed(1, st.at[6].idx)) {
                const MString& s6 = st.str(6);
                for (auto [cls, type] : pref)
                    if (s6.len == 3 * i7 - type && s6.cls() == cls) k = st.at[6].idx;
            }
            for (auto [cls, type] : pref) {
                if (k >= 0) break;
                int len = 3 * i7 - type;
                k = find(1, false, [&](const MString& s) { return s.len == len && s.cls() == cls; });
                if (k >= 0) break;
            }
            if (k < 0) k = find(1, false, [&](const MString& s) { return s.cls() <= 1 && eff(s.len) >= i7 + 1; });
            if (k < 0) return 11;
            place(8, 1, k);
            auto& s = st.tab(1)[k];
            if (type_of(s.len) == 1 && (s.rightmost_mark() == 5 || s.rightmost_mark() == 6)) {
                s.inactive = true;
                note("inactivated");
            }
        }

        // [8] on a type-I string whose effective length is the nu^(2) base length (i7 for a
        // fresh [8], i6 for [8] left of [7]): where [4] would compare against nu^(2), [9]
        // has only the longer singular strings of nu^(1)
        int base = 0;
        {
            const MString& s8 = st.str(8);
            if (st.in(7) == 2 && s8.marks == std::vector<int>{8})
                base = st.i[7];
            else if (st.in(7) == 1 && st.at[7].idx == st.at[8].idx && !s8.marked(4) && st.in(6) == 2)
                base = st.i[6];
        }
        if (base > 0 && st.i[8] == 3 * base - 1) {
            int k1 = find(1, false, [&](const MString& s) { return s.cls() == 0 && s.len >= st.i[8] + 1; });
            if (k1 < 0) return 12;
            place(9, 1, k1);
        } else {
            int floor = st.str(8).inactive ? st.i[8] + 1 : st.i[8];
            while (true) {
                k = find(1, false, [&](const MString& s) { return s.cls() == 0 && s.len >= floor; });
                if (k < 0) return 12;
                const auto& s = st.tab(1)[k];
                int t = type_of(s.len), rm = s.rightmost_mark();
                if ((t == 1 && rm == 2) || (t == 2 && rm == 3)) {
                    floor = s.len + 1;
                    continue;
                }
                break;
            }
            const MString s8 = st.str(8);
            const auto& s9 = st.tab(1)[k];
            if (k != st.at[8].idx && s8.marks == std::vector<int>{8} && type_of(s9.len) == 0 && type_of(s8.len) == 1 && eff(s9.len) == eff(s8.len)) {
                note("type-I [8] selection replaced by the type-0 [9] string");
                unplace(8);
                place(8, 1, k);
                if (!place_left(9, 8)) return 12;
            } else {
                place(9, 1, k);
            }
        }

        {
            int e9 = eff(st.i[9]);
            // [10] may continue a string carrying just [1] (preferably) or just [4]
            prefer = st.at[1].idx;
            k = find(2, false, [&](const MString& s) {
                return s.cls() == 0 && s.len >= e9 && (s.marks.empty() || s.marks == std::vector<int>{1} || s.marks == std::vector<int>{4});
            });
            prefer = -1;
            if (k < 0) return 13;
            place(10, 2, k);
            return 14;
        }
    }
};

}  // namespace

Letter run_box_marking(const RiggedConfig& r, MarkingState& st) {
    st = init_state(r);
    Engine eng{st};
    Letter b = eng.run();
    st.log.push_back("return " + crystal::name(b));
    return b;
}

namespace {

// How far below the new vacancy number each shortened string is set: 0, 1 or 2.
std::map<std::pair<int, int>, int> rigging_offsets(const MarkingState& st) {
    std::map<std::pair<int, int>, int> off;
    auto key = [&](int n) { return std::pair(st.at[n].a, st.at[n].idx); };
    auto same = [&](int n, int m) { return st.has(n) && st.has(m) && st.at[n].a == st.at[m].a && st.at[n].idx == st.at[m].idx; };
    auto only = [&](int n) { return st.has(n) && st.str(n).marks == std::vector<int>{n}; };
    // [5] on a q-singular nu^(2) string with i4^eff = i5, or [5][6] together on a singular one with i4^eff = i6 - 1.
    auto cond56 = [&]() {
        if (st.in(5) != 2) return false;
        int e4 = eff(st.i[4]);
        if (st.str(5).cls() == 1 && e4 == st.i[5]) return true;
        return same(5, 6) && st.str(5).cls() == 0 && e4 == st.i[6] - 1;
    };
    auto cond10 = [&]() { return st.in(10) == 2 && eff(st.i[9]) == st.i[10]; };

    if (st.has(6) && !same(5, 6)) off[key(6)] = 1;  // RA-1

    if (st.in(3) == 1 && !same(2, 3) && st.in(4) != 1 && !st.str(3).marked(5)) {  // RA-2
        int t = type_of(st.i[3]);
        if (t == 2)
            off[key(3)] = 1;
        else
            off[key(3)] = (st.in(4) == 2 && eff(st.i[3]) == st.i[4]) ? 0 : 1;
    }

    if (st.in(4) == 1 && !same(3, 4) && only(4)) {  // RA-3
        int t = type_of(st.i[4]);
        if (t == 0)
            off[key(4)] = cond56() ? 0 : 2;
        else if (t == 1)
            off[key(4)] = st.in(5) != 2 ? 2 : (cond56() ? 1 : 2);
        else
            off[key(4)] = 2;
        if (only(3)) off[key(3)] = 1;
    }

    if (st.in(4) == 1 && same(3, 4) && !same(2, 3) && !st.str(4).marked(7)) {  // RA-4
        int t = type_of(st.i[4]);
        off[key(4)] = (t == 0 && cond56()) ? 0 : 1;
    }

    if (st.in(8) == 1 && !st.has(9) && only(8)) off[key(8)] = 1;  // RA-5

    if (st.in(9) == 1 && same(8, 9) && st.str(9).rightmost_mark() == 8) {  // RA-6
        int t = type_of(st.i[9]);
        off[key(9)] = (t == 0 && cond10()) ? 0 : 1;
    }

    if (st.in(9) == 1 && !same(8, 9)) {  // RA-7
        int t = type_of(st.i[9]);
        if (t == 0)
            off[key(9)] = cond10() ? 0 : 2;
        else if (t == 1)
            off[key(9)] = cond10() ? 1 : 2;
        else
            off[key(9)] = 2;
        if (only(8)) off[key(8)] = 1;
    }
    return off;
}

}  // namespace

RiggedConfig adjust_riggings(const MarkingState& st, Letter b, const RiggedConfig& r) {
    RiggedConfig out;
    out.L = r.L - 1;
    struct Pending { int a, len, off; bool touched; int rig; };
    std::vector<Pending> pend;
    auto off = rigging_offsets(st);
    (void)b;
    for (int a : {1, 2})
        for (int k = 0; k < int(st.tab(a).size()); ++k) {
            const auto& s = st.tab(a)[k];
            int nl = s.free();
            if (nl <= 0) continue;
            bool touched = !s.marks.empty();
            int o = 0;
            if (auto it = off.find({a, k}); it != off.end()) o = it->second;
            pend.push_back({a, nl, o, touched, s.rig});
            out.nu(a).push_back({nl, s.rig});
        }
    Configuration c = out.shape();
    out.nu1.clear();
    out.nu2.clear();
    for (const auto& p : pend) {
        int rig = p.rig;
        if (p.touched) {
            int v = rc::vacancy(c, p.a, p.len);
            rig = v - p.off;
            if (rig < 0) throw RuleError("adjusted rigging below zero");
        }
        out.nu(p.a).push_back({p.len, rig});
    }
    out.canonicalize();
    return out;
}

DeltaOutcome delta_theta(const RiggedConfig& r) {
    if (r.L < 1) throw std::invalid_argument("delta_theta needs L >= 1");
    DeltaOutcome o;
    o.letter = run_box_marking(r, o.marking);
    o.rc = adjust_riggings(o.marking, o.letter, r);
    o.delta_alpha = int(r.nu2.size()) - int(o.rc.nu2.size());
    return o;
}

Path phi(const RiggedConfig& r) {
    Path p;
    RiggedConfig cur = r;
    while (cur.L > 0) {
        auto o = delta_theta(cur);
        p.push_back(o.letter);
        cur = std::move(o.rc);
    }
    return p;
}

std::pair<int, int> boxes_removed(Letter b) {
    Weight w = crystal::weight(b);
    return {3 - 2 * w.l1 - 3 * w.l2, 2 - w.l1 - 2 * w.l2};
}

VacancyDelta vacancy_changes(Letter b, const MarkingState& st, int imax) {
    VacancyDelta d;
    d.d1.assign(imax + 1, 0);
    d.d2.assign(imax + 1, 0);
    if (b == kEmpty) return d;  // VC-empty: nothing moves
    for (int i = 1; i <= imax; ++i) d.d2[i] = -1;  // VC-1
    if (b == 1) return d;

    // Later cases overwrite the earlier tables mark by mark: a mark at column c
    // contributes 2chi(i>=c) | -chi(3i>=c) in nu1 and -min(i,3c)+min(i,3c-3) | 2chi(i>=c) in nu2.
    auto [want1, want2] = boxes_removed(b);
    int got1 = 0, got2 = 0;
    for (int a : {1, 2})
        for (const auto& s : st.tab(a)) (a == 1 ? got1 : got2) += int(s.marks.size());
    if (got1 != want1 || got2 != want2)
        throw RuleError("no VC case: letter " + crystal::name(b) + " with " + std::to_string(got1) + "+" +
                        std::to_string(got2) + " marked boxes");
    for (int a : {1, 2})
        for (const auto& s : st.tab(a))
            for (std::size_t m = 0; m < s.marks.size(); ++m) {
                int c = s.len - int(m);
                for (int i = 1; i <= imax; ++i) {
                    if (a == 1) {
                        d.d1[i] += 2 * (i >= c);
                        d.d2[i] -= (3 * i >= c);
                    } else {
                        d.d1[i] -= 3 * (i >= 3 * c) + 2 * (i == 3 * c - 1) + (i == 3 * c - 2);
                        d.d2[i] += 2 * (i >= c);
                    }
                }
            }
    return d;
}

std::string describe(const MarkingState& st) {
    std::ostringstream os;
    for (int a : {1, 2}) {
        os << "nu" << a << ":";
        for (const auto& s : st.tab(a)) {
            os << " " << s.len << "(" << s.vac << "," << s.rig << ")";
            if (!s.marks.empty()) {
                os << "[";
                for (std::size_t k = 0; k < s.marks.size(); ++k) os << (k ? "," : "") << s.marks[k];
                os << "]";
            }
            if (s.inactive) os << "*";
        }
        os << (a == 1 ? " | " : "");
    }
    return os.str();
}

}  // namespace g2rc::bij
