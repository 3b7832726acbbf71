#pragma once

#include "zagreb/canonical.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/extremal.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/io.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/transform.hpp"
#include "zagreb/tree.hpp"
