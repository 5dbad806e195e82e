#pragma once

#include "cyclocode/character_check.hpp"
#include "cyclocode/closed_form.hpp"
#include "cyclocode/codes.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/errors.hpp"
#include "cyclocode/finite_field.hpp"
#include "cyclocode/integer_math.hpp"
#include "cyclocode/sweep.hpp"
#include "cyclocode/verification.hpp"
#include "cyclocode/weight_enumerator.hpp"
