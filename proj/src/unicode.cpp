// SPDX-License-Identifier: Apache-2.0
#include "podsum/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace podsum::uni {

namespace {

struct Range {
    char32_t lo;
    char32_t hi;
};

constexpr bool in_ranges(const Range* ranges, std::size_t n, char32_t cp) {
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (cp < ranges[mid].lo) {
            hi = mid;
        } else if (cp > ranges[mid].hi) {
            lo = mid + 1;
        } else {
            return true;
        }
    }
    return false;
}

// Letters, digits and combining marks across the major scripts. Coarse on
// purpose: whole blocks are included where the distinction between letters
// and in-word marks does not matter for tokenization.
constexpr Range kWordRanges[] = {
    {0x0030, 0x0039}, {0x0041, 0x005A}, {0x0061, 0x007A},
    {0x00AA, 0x00AA}, {0x00B5, 0x00B5}, {0x00BA, 0x00BA},
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02C1},
    {0x02C6, 0x02D1}, {0x0300, 0x0374}, {0x0376, 0x0377},
    {0x037A, 0x037D}, {0x037F, 0x037F}, {0x0386, 0x0386},
    {0x0388, 0x03FF}, {0x0400, 0x0481}, {0x0483, 0x052F},
    {0x0531, 0x0556}, {0x0559, 0x0559}, {0x0561, 0x0587},
    {0x05B0, 0x05BD}, {0x05C1, 0x05C2}, {0x05C7, 0x05C7},
    {0x05D0, 0x05EA}, {0x05EF, 0x05F2}, {0x0610, 0x061A},
    {0x0620, 0x0669}, {0x066E, 0x06D3}, {0x06D5, 0x06DC},
    {0x06DF, 0x06E8}, {0x06EA, 0x06FC}, {0x06FF, 0x06FF},
    {0x0710, 0x074A}, {0x074D, 0x07B1}, {0x07C0, 0x07EA},
    {0x0800, 0x082D}, {0x0840, 0x085B}, {0x08A0, 0x08FF},
    {0x0900, 0x0963}, {0x0966, 0x096F}, {0x0971, 0x09FB},
    {0x0A01, 0x0A75}, {0x0A81, 0x0AFF}, {0x0B01, 0x0B77},
    {0x0B82, 0x0BFA}, {0x0C00, 0x0C7F}, {0x0C80, 0x0CFF},
    {0x0D00, 0x0D7F}, {0x0D81, 0x0DF3}, {0x0E01, 0x0E3A},
    {0x0E40, 0x0E4E}, {0x0E50, 0x0E59}, {0x0E81, 0x0EDF},
    {0x0F00, 0x0FDA}, {0x1000, 0x109F}, {0x10A0, 0x10FF},
    {0x1100, 0x11FF}, {0x1200, 0x137F}, {0x13A0, 0x13FD},
    {0x1400, 0x167F}, {0x16A0, 0x16F8}, {0x1700, 0x17E9},
    {0x1820, 0x18AA}, {0x1E00, 0x1FBC}, {0x1FC2, 0x1FCC},
    {0x1FD0, 0x1FDB}, {0x1FE0, 0x1FEC}, {0x1FF2, 0x1FFC},
    {0x2C60, 0x2C7F}, {0x2D00, 0x2D2F}, {0x3005, 0x3007},
    {0x3040, 0x30FA}, {0x30FC, 0x30FF}, {0x3105, 0x312F},
    {0x3130, 0x318F}, {0x31A0, 0x31BF}, {0x31F0, 0x31FF},
    {0x3400, 0x4DBF}, {0x4E00, 0x9FFF}, {0xA000, 0xA48C},
    {0xA640, 0xA69F}, {0xA720, 0xA7FF}, {0xAC00, 0xD7A3},
    {0xF900, 0xFAFF}, {0xFB00, 0xFB06}, {0xFB13, 0xFB17},
    {0xFB1D, 0xFB4F}, {0xFE70, 0xFEFC}, {0xFF10, 0xFF19},
    {0xFF21, 0xFF3A}, {0xFF41, 0xFF5A}, {0xFF66, 0xFFDC},
    {0x10000, 0x1000F}, {0x20000, 0x2A6DF}, {0x2A700, 0x2EBEF},
};

// Extended_Pictographic per the UCD emoji data, with the emoji component
// code points folded in (regional indicators, skin tones, keycap, VS, ZWJ).
constexpr Range kEmojiRanges[] = {
    {0x00A9, 0x00A9}, {0x00AE, 0x00AE}, {0x200D, 0x200D},
    {0x203C, 0x203C}, {0x2049, 0x2049}, {0x20E3, 0x20E3},
    {0x2122, 0x2122}, {0x2139, 0x2139}, {0x2194, 0x2199},
    {0x21A9, 0x21AA}, {0x231A, 0x231B}, {0x2328, 0x2328},
    {0x2388, 0x2388}, {0x23CF, 0x23CF}, {0x23E9, 0x23F3},
    {0x23F8, 0x23FA}, {0x24C2, 0x24C2}, {0x25AA, 0x25AB},
    {0x25B6, 0x25B6}, {0x25C0, 0x25C0}, {0x25FB, 0x25FE},
    {0x2600, 0x2605}, {0x2607, 0x2612}, {0x2614, 0x2685},
    {0x2690, 0x2705}, {0x2708, 0x2712}, {0x2714, 0x2714},
    {0x2716, 0x2716}, {0x271D, 0x271D}, {0x2721, 0x2721},
    {0x2728, 0x2728}, {0x2733, 0x2734}, {0x2744, 0x2744},
    {0x2747, 0x2747}, {0x274C, 0x274C}, {0x274E, 0x274E},
    {0x2753, 0x2755}, {0x2757, 0x2757}, {0x2763, 0x2767},
    {0x2795, 0x2797}, {0x27A1, 0x27A1}, {0x27B0, 0x27B0},
    {0x27BF, 0x27BF}, {0x2934, 0x2935}, {0x2B05, 0x2B07},
    {0x2B1B, 0x2B1C}, {0x2B50, 0x2B50}, {0x2B55, 0x2B55},
    {0x3030, 0x3030}, {0x303D, 0x303D}, {0x3297, 0x3297},
    {0x3299, 0x3299}, {0xFE00, 0xFE0F}, {0x1F000, 0x1F0FF},
    {0x1F10D, 0x1F10F}, {0x1F12F, 0x1F12F}, {0x1F16C, 0x1F171},
    {0x1F17E, 0x1F17F}, {0x1F18E, 0x1F18E}, {0x1F191, 0x1F19A},
    {0x1F1AD, 0x1F1FF}, {0x1F201, 0x1F20F}, {0x1F21A, 0x1F21A},
    {0x1F22F, 0x1F22F}, {0x1F232, 0x1F23A}, {0x1F23C, 0x1F23F},
    {0x1F249, 0x1F3FF}, {0x1F400, 0x1F53D}, {0x1F546, 0x1F64F},
    {0x1F680, 0x1F6FF}, {0x1F774, 0x1F77F}, {0x1F7D5, 0x1F7FF},
    {0x1F80C, 0x1F80F}, {0x1F848, 0x1F84F}, {0x1F85A, 0x1F85F},
    {0x1F888, 0x1F88F}, {0x1F8AE, 0x1F8FF}, {0x1F90C, 0x1F93A},
    {0x1F93C, 0x1F945}, {0x1F947, 0x1FAFF}, {0x1FC00, 0x1FFFD},
};

} // namespace

char32_t decode(std::string_view s, std::size_t& i) {
    const auto n = s.size();
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return i + k < n &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    auto tail = [&](std::size_t k) {
        return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        char32_t cp = ((b0 & 0x1Fu) << 6) | tail(1);
        i += 2;
        return cp >= 0x80 ? cp : kReplacement;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        char32_t cp = ((b0 & 0x0Fu) << 12) | (tail(1) << 6) | tail(2);
        i += 3;
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return kReplacement;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        char32_t cp = ((b0 & 0x07u) << 18) | (tail(1) << 12) | (tail(2) << 6) | tail(3);
        i += 4;
        return (cp >= 0x10000 && cp <= 0x10FFFF) ? cp : kReplacement;
    }
    ++i;
    return kReplacement;
}

void encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::size_t scalar_count(std::string_view s) {
    std::size_t i = 0, count = 0;
    while (i < s.size()) {
        decode(s, i);
        ++count;
    }
    return count;
}

bool is_word_char(char32_t cp) {
    return in_ranges(kWordRanges, std::size(kWordRanges), cp);
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
        case 0x20: case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_apostrophe(char32_t cp) {
    return cp == 0x27 || cp == 0x2019;
}

char32_t to_lower(char32_t cp) {
    if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp == 0x130) return 0x69;  // dotted capital I
    if (cp == 0x178) return 0xFF;
    if (cp == 0x1E9E) return 0xDF; // capital sharp s
    if (cp >= 0x100 && cp <= 0x137) return cp | 1;
    if (cp >= 0x139 && cp <= 0x148) return (cp & 1) ? cp + 1 : cp;
    if (cp >= 0x14A && cp <= 0x177) return cp | 1;
    if (cp >= 0x179 && cp <= 0x17E) return (cp & 1) ? cp + 1 : cp;
    if (cp >= 0x182 && cp <= 0x185) return cp | 1;
    if (cp >= 0x1CD && cp <= 0x1DC) return (cp & 1) ? cp + 1 : cp;
    if (cp >= 0x1DE && cp <= 0x1EF) return cp | 1;
    if (cp >= 0x1F8 && cp <= 0x21F) return cp | 1;
    if (cp >= 0x222 && cp <= 0x233) return cp | 1;
    if (cp >= 0x246 && cp <= 0x24F) return cp | 1;
    if (cp == 0x386) return 0x3AC;
    if (cp >= 0x388 && cp <= 0x38A) return cp + 0x25;
    if (cp == 0x38C) return 0x3CC;
    if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
    if (cp >= 0x391 && cp <= 0x3A1) return cp + 0x20;
    if (cp >= 0x3A3 && cp <= 0x3AB) return cp + 0x20;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
    if (cp >= 0x460 && cp <= 0x481) return cp | 1;
    if (cp >= 0x48A && cp <= 0x4BF) return cp | 1;
    if (cp >= 0x4C1 && cp <= 0x4CE) return (cp & 1) ? cp + 1 : cp;
    if (cp >= 0x4D0 && cp <= 0x52F) return cp | 1;
    if (cp >= 0x531 && cp <= 0x556) return cp + 0x30;
    if (cp >= 0x1E00 && cp <= 0x1E95) return cp | 1;
    if (cp >= 0x1EA0 && cp <= 0x1EFF) return cp | 1;
    if (cp >= 0x1F08 && cp <= 0x1FAF && (cp & 0x0F) >= 8) return cp - 8;
    if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;
    return cp;
}

bool is_emoji(char32_t cp) {
    return in_ranges(kEmojiRanges, std::size(kEmojiRanges), cp);
}

std::string strip_emoji(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp = decode(s, i);
        if (!is_emoji(cp)) encode(cp, out);
    }
    return out;
}

std::string trim(std::string_view s) {
    // Code point boundaries of non-space content.
    std::size_t i = 0;
    std::size_t begin = s.size(), end = 0;
    while (i < s.size()) {
        std::size_t at = i;
        char32_t cp = decode(s, i);
        if (!is_space(cp)) {
            begin = std::min(begin, at);
            end = i;
        }
    }
    if (begin >= end) return {};
    return std::string(s.substr(begin, end - begin));
}

} // namespace podsum::uni
