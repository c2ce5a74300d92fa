// Copyright 2026 The isored Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace isored {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rational function was built with an identically-zero denominator.
struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is identically zero") {}
};

/// Division by the zero function.
struct DivisionByZeroFunction : Error {
    DivisionByZeroFunction() : Error("division by the zero function") {}
};

/// Evaluation at a point where the denominator vanishes exactly.
struct PoleError : Error {
    using Error::Error;
    PoleError() : Error("evaluation at a pole") {}
};

/// Root extraction requested for the zero polynomial.
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("the zero polynomial has no root multiset") {}
};

/// Malformed weight expression or graph document. Columns count Unicode
/// code points, 1-based; line is 0 for bare weight expressions.
struct SyntaxError : Error {
    SyntaxError(std::string what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)),
          line(line),
          column(column),
          detail(std::move(what)) {}

    std::size_t line;
    std::size_t column;
    std::string detail;

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        std::string s = "syntax error";
        if (line > 0) s += " at line " + std::to_string(line);
        s += (line > 0 ? ", col " : " at col ") + std::to_string(column);
        return s + ": " + what;
    }
};

/// The same ordered vertex pair carries two edges in one document.
struct DuplicateEdge : Error {
    DuplicateEdge(const std::string& from, const std::string& to)
        : Error("duplicate edge " + from + " -> " + to) {}
};

/// A vertex label that is not part of the graph.
struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& label) : Error("unknown vertex '" + label + "'") {}
};

/// Removing a vertex whose current loop weight is identically lambda.
struct DivisionByLambda : Error {
    DivisionByLambda(std::string vertex, std::vector<std::string> removal_prefix)
        : Error(format(vertex, removal_prefix)),
          vertex(std::move(vertex)),
          removal_prefix(std::move(removal_prefix)) {}

    std::string vertex;
    std::vector<std::string> removal_prefix;

private:
    static std::string format(const std::string& v, const std::vector<std::string>& prefix) {
        std::string s = "cannot eliminate vertex '" + v + "': its loop weight is identically λ";
        if (!prefix.empty()) {
            s += " (after removing ";
            for (std::size_t i = 0; i < prefix.size(); ++i) {
                if (i) s += ", ";
                s += prefix[i];
            }
            s += ")";
        }
        s += "; a different removal order may succeed";
        return s;
    }
};

/// Branch reduction requested over a non-structural vertex set.
struct NotStructural : Error {
    explicit NotStructural(const std::string& reason) : Error("set is not structural: " + reason) {}
};

/// A selection rule picked no vertex at all.
struct EmptySelection : Error {
    explicit EmptySelection(const std::string& rule) : Error("rule '" + rule + "' selects no vertex") {}
};

/// An orbit did not reach its attractor within the step cap. Reaching this
/// with a cap of at least |V| would contradict the convergence bound, so it
/// is reported as an anomaly rather than silently truncated.
struct StepCapExceeded : Error {
    explicit StepCapExceeded(std::size_t cap)
        : Error("orbit exceeded the step cap of " + std::to_string(cap) + " without reaching an attractor") {}
};

/// det(M(λ) − λI) is identically zero; the spectrum is undefined.
struct DegenerateDeterminant : Error {
    DegenerateDeterminant() : Error("characteristic determinant is identically zero") {}
};

}  // namespace isored
