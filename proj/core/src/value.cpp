//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/value.hpp>

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace lpodc {

Value Value::integer(std::int64_t v) {
    Value r;
    r.kind_ = Kind::Integer;
    r.int_  = v;
    return r;
}

Value Value::symbol(std::string name) {
    Value r;
    r.kind_ = Kind::Symbol;
    r.name_ = std::move(name);
    return r;
}

Value Value::function(std::string name, std::vector<Value> args) {
    if (args.empty()) {
        return symbol(std::move(name));
    }
    Value r;
    r.kind_ = Kind::Function;
    r.name_ = std::move(name);
    r.args_ = std::move(args);
    return r;
}

std::int64_t Value::asInteger() const {
    if (kind_ != Kind::Integer) {
        throw std::logic_error("value '" + str() + "' is not an integer");
    }
    return int_;
}

std::strong_ordering operator<=>(const Value& lhs, const Value& rhs) {
    if (auto c = lhs.kind_ <=> rhs.kind_; c != 0) {
        return c;
    }
    switch (lhs.kind_) {
        case Value::Kind::Integer: return lhs.int_ <=> rhs.int_;
        case Value::Kind::Symbol : return lhs.name_ <=> rhs.name_;
        case Value::Kind::Function:
            if (auto c = lhs.args_.size() <=> rhs.args_.size(); c != 0) {
                return c;
            }
            if (auto c = lhs.name_ <=> rhs.name_; c != 0) {
                return c;
            }
            return lhs.args_ <=> rhs.args_;
    }
    return std::strong_ordering::equal;
}

std::string Value::str() const {
    switch (kind_) {
        case Kind::Integer: return std::to_string(int_);
        case Kind::Symbol : return name_;
        case Kind::Function: {
            std::string out = name_ + "(";
            for (std::size_t i = 0; i != args_.size(); ++i) {
                if (i) {
                    out += ',';
                }
                out += args_[i].str();
            }
            return out + ")";
        }
    }
    return {};
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

std::string Atom::str() const { return toValue().str(); }

Value Atom::toValue() const { return Value::function(predicate, args); }

Atom Atom::fromValue(const Value& v) {
    if (v.kind() == Value::Kind::Integer) {
        throw std::invalid_argument("integer '" + v.str() + "' is not an atom");
    }
    return Atom(v.name(), v.args());
}

std::strong_ordering operator<=>(const Atom& lhs, const Atom& rhs) {
    if (auto c = lhs.predicate <=> rhs.predicate; c != 0) {
        return c;
    }
    return lhs.args <=> rhs.args;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.str(); }

std::string Literal::str() const { return negated ? "not " + atom.str() : atom.str(); }

std::string toString(const AtomSet& atoms) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& a : atoms) {
        out += std::exchange(sep, ", ");
        out += a.str();
    }
    return out + "}";
}

std::string AnswerSet::str() const {
    auto out = toString(atoms);
    if (penalty) {
        out += " [" + std::to_string(*penalty) + "]";
    }
    return out;
}

namespace {
class ValueReader {
public:
    explicit ValueReader(std::string_view t) : text_(t) {}

    Value read() {
        skipWs();
        if (pos_ < text_.size() && (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
            std::int64_t v     = 0;
            auto         first = text_.data() + pos_;
            auto [ptr, ec]     = std::from_chars(first, text_.data() + text_.size(), v);
            if (ec != std::errc{}) {
                fail("integer expected");
            }
            pos_ += static_cast<std::size_t>(ptr - first);
            return Value::integer(v);
        }
        auto start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("identifier expected");
        }
        std::string name(text_.substr(start, pos_ - start));
        skipWs();
        std::vector<Value> args;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            for (;;) {
                args.push_back(read());
                skipWs();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("',' or ')' expected");
            }
        }
        return Value::function(std::move(name), std::move(args));
    }

    void finish() {
        skipWs();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
    }

private:
    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const char* what) const {
        throw std::invalid_argument(std::string(what) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t      pos_ = 0;
};
} // namespace

Atom atomFromString(std::string_view text) {
    ValueReader r(text);
    auto        v = r.read();
    r.finish();
    return Atom::fromValue(v);
}

} // namespace lpodc
