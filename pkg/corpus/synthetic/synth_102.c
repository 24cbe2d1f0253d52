extern void print_int(int v);

int g0 = 2;
int g1 = 9;
int g2 = 5;
int a[8] = {2, 8, 9, 2, 6, 4, 9, 6};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = (9 & (a[g1 & 7] == 6));
    if (t > 14) {
        return t - g0 % (1 + ((9) & 3));
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = ((8 < v) & (3 < 5));
    if (t > 11) {
        return t - 6 * a[g1 & 7];
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = 4;
    if (t > 20) {
        return t - 7 ^ a[g2 & 7];
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 7;
    x1 = 8;
    x2 = 7;
    x3 = 8;
    if (x1 & x3 > 3) {
        x1++;
        x2 = h2(x3 | a[x1 & 7], a[x3 & 7]);
    }
    x1 = (x1 - x1 | x3);
    a[x3 & 7] = x1 + 3;
    print_int(a[g2 & 7]);
    print_int(g1 * x0);
    switch (a[g1 & 7] | 0 & 3) {
    case 0:
        x1++;
        x1++;
        g1 = x1;
        break;
    case 1:
        g1 = a[g1 & 7];
        break;
    default:
        x1 = (1 / (1 + ((a[x2 & 7]) & 3)) & a[x3 & 7]);
    }
    i0 = 0;
    while (i0 < 0) {
        g0 = (x3 - a[x1 & 7] == 3);
        x2 = (7 * x0 - 1 - a[g1 & 7]);
        i0++;
    }
    i0 = 0;
    while (i0 < 1) {
        g2 = x3;
        print_int(g2 | x3);
        for (i1 = 0; i1 < 3; i1++) {
            x1 = (g1 + g0 % (1 + ((1) & 3)));
            print_int(x3 | x0);
        }
        bump(6);
        i0++;
    }
    x3 = 3;
    x2 = g2;
    for (i0 = 0; i0 < 1; i0++) {
        g1 = 1;
        bump(x0 & 8);
        print_int(a[g2 & 7] & a[x0 & 7]);
        switch ((g0 == 6) & 3) {
        case 0:
            g2 = (x0 ^ a[x1 & 7] == a[g1 & 7] - a[x3 & 7]);
            break;
        case 1:
            a[a[x0 & 7] & 7] = (4 == g2);
            break;
        case 2:
            g1 = x1;
        default:
            a[2 & 7] = g0 + g0;
        }
    }
    switch ((x0 == a[x0 & 7]) & 3) {
    case 0:
        x0 = h1(x2 ^ g2, a[x3 & 7]);
        a[x1 & 7] = (x1 < g0);
        break;
    case 1:
        g0 = (a[g0 & 7] & x0 % (1 + ((a[g1 & 7]) & 3)));
    default:
        x3 = (x1 % (1 + ((g0) & 3)) == 5);
    }
    g2 = (a[x1 & 7] == g1 * x1);
    a[g2 & 7] = 2 + 1;
    for (i0 = 0; i0 < 3; i0++) {
        if (3 != 7) {
            if (2 == 1) break;
        } else {
            g1 = a[x3 & 7];
        }
    }
    x2--;
    if ((x1 == x0) < 2) {
        for (i0 = 0; i0 < 2; i0++) {
            if ((a[g1 & 7] < x0) == 0) break;
            g1 = (0 & a[g2 & 7]);
            x3 = h2((a[x1 & 7] == x0), a[x3 & 7] - a[g2 & 7]);
        }
        g2 = ((x3 == a[x3 & 7]) & x3 & x0);
        x3 = h1(g0 % (1 + ((a[x3 & 7]) & 3)), g0 / (1 + ((0) & 3)));
    }
    g1 = (5 | g0);
    if (a[g1 & 7] ^ g1 > 0) {
        for (i0 = 0; i0 < 0; i0++) {
            g2 = g2;
            x1++;
        }
        x3 = (x1 & a[g1 & 7]);
    }
    x3 = (a[g2 & 7] & a[x0 & 7]);
    g1 = (x1 | 7 < a[x1 & 7] % (1 + ((x1) & 3)));
    a[6 & 7] = x3 & 6;
    i0 = 0;
    while (i0 < 1) {
        x3 = 6;
        i0++;
    }
    if (9 % (1 + ((x2) & 3)) > 7) {
        if (1 == 4) {
            g1 = x3 % (1 + ((x1) & 3)) / (1 + ((g0 / (1 + ((g2) & 3))) & 3));
            g1 = x1;
        } else {
            a[x3 & 7] = 6 - x0;
        }
        x1--;
        x1 = ((x0 < 7) & a[x2 & 7] ^ g0);
    }
    i0 = 0;
    do {
        a[5 & 7] = 8;
        i0++;
    } while (i0 < 1);
    switch (x1 & a[g0 & 7] & 3) {
    case 0:
        i0 = 0;
        while (i0 < 0) {
            if (x2 == 0) break;
            i0++;
        }
        break;
    case 1:
        x0++;
        break;
    default:
        g1 = g1;
    }
    x1 = g0;
    i0 = 0;
    do {
        print_int(g2 + x1);
        g2 = (g0 + g1 == 0);
        x3 = 1 / (1 + ((2) & 3)) % (1 + ((g0 ^ 1) & 3));
        i0++;
    } while (i0 < 1);
    x1++;
    i0 = 0;
    do {
        if (x1 != 6) {
            a[9 & 7] = g1;
            if (g1 == 2) break;
            if (9 == 1) break;
        } else {
            bump(0);
        }
        x2--;
        i0++;
    } while (i0 < 2);
    if (a[x0 & 7] % (1 + ((x1) & 3)) < 9) {
        if (g2 | x0 != 6) {
            x0 = (x0 & g2 - x2);
        }
        x3++;
    } else {
        x3 = (0 / (1 + ((x3) & 3)) - g0 / (1 + ((g2) & 3)));
        x3++;
    }
    i0 = 0;
    while (i0 < 2) {
        x3 = (3 - x1 % (1 + ((g0) & 3)));
        x1 = h2(x3 & 9, x3);
        i0++;
    }
    x1 = (x3 | 8 == g1);
    a[a[g2 & 7] & 7] = x2;
    for (i0 = 0; i0 < 1; i0++) {
        a[a[g0 & 7] & 7] = (x0 == a[g2 & 7]);
        g1 = 8;
        bump((x3 == 5));
        print_int(x3 ^ x3);
        x0 = g1;
    }
    x0 = (3 + g2 | x0 - a[x1 & 7]);
    print_int(x1);
    x1 = ((0 == a[x1 & 7]) < x1 | g1);
    x1 = (g1 ^ a[x1 & 7] * 1 + x3);
    g0 = (x3 ^ 7 - 6);
    x1 = a[g0 & 7];
    if (x0 == 7) {
        x0 = h2(a[x0 & 7] - a[x1 & 7], 7);
        g0 = (a[x3 & 7] ^ x2 & 1);
    } else {
        i0 = 0;
        while (i0 < 3) {
            g2 = a[g0 & 7];
            i0++;
        }
    }
    i0 = 0;
    while (i0 < 0) {
        g0 = g1 % (1 + ((5) & 3));
        if ((x0 < g0) == 3) break;
        i0++;
    }
    if (a[x2 & 7] < 6) {
        print_int(x0);
    }
    x0--;
    i0 = 0;
    do {
        x3 = g0;
        g0 = (x3 - 2 - g1 - x0);
        if (a[x1 & 7] != 1) {
            bump(g1);
            x2--;
        }
        i0++;
    } while (i0 < 2);
    x0 = 7 / (1 + ((a[g2 & 7] | g2) & 3));
    i0 = 0;
    while (i0 < 1) {
        g1 = (g2 * x2);
        a[g1 & 7] = 8;
        bump(x0);
        g2 = (g0 & 6 | g2);
        x0++;
        i0++;
    }
    for (i0 = 0; i0 < 2; i0++) {
        x3 = ((g1 == 4) ^ (0 < x0));
        x0 = (a[x0 & 7] < g1 / (1 + ((x3) & 3)));
        x2 = (g0 + 9 + 1 * 6);
    }
    for (i0 = 0; i0 < 0; i0++) {
        if ((x1 < a[g0 & 7]) == 3) continue;
        i1 = 0;
        while (i1 < 0) {
            g0 = (a[g1 & 7] % (1 + ((x0) & 3)) | 1 + 2);
            x3 = (a[x0 & 7] + a[x1 & 7] % (1 + ((2) & 3)));
            i1++;
        }
    }
    x0 = h0(g0 % (1 + ((2) & 3)), g1 * 3);
    print_int(1);
    for (i0 = 0; i0 < 0; i0++) {
        x3 = (a[g1 & 7] & a[g1 & 7] | a[g2 & 7]);
        a[2 & 7] = 7;
        x2 = (x2 & 7 < g2);
    }
    a[a[x1 & 7] & 7] = x0 ^ g1;
    bump(5);
    a[6 & 7] = a[g2 & 7] + x2;
    x3 = (x3 & 3 - (0 < 1));
    for (i0 = 0; i0 < 0; i0++) {
        if (x0 ^ a[x2 & 7] != 4) {
            g2 = (a[x2 & 7] & 8);
            if (x1 & x0 == 3) continue;
        }
        a[a[x1 & 7] & 7] = a[x1 & 7] & g1;
    }
    print_int(g1 + a[x2 & 7]);
    i0 = 0;
    do {
        x1 = g0;
        x1 = (a[x0 & 7] ^ a[g0 & 7] == a[x0 & 7] * a[x0 & 7]);
        i0++;
    } while (i0 < 0);
    i0 = 0;
    do {
        g1 = 2 % (1 + ((a[g1 & 7] | x1) & 3));
        print_int(5 - g1);
        i0++;
    } while (i0 < 1);
    if (2 | a[g1 & 7] == 5) {
        g0 = (2 + g0);
        a[9 & 7] = 9 ^ 2;
        g2 = 5 % (1 + ((a[x2 & 7] ^ a[x3 & 7]) & 3));
        bump(4);
        x3 = 7;
        x2--;
    }
    for (i0 = 0; i0 < 0; i0++) {
        g0 = x0 & x2 % (1 + ((4 & x3) & 3));
        a[a[g0 & 7] & 7] = g2 % (1 + ((x1) & 3));
    }
    g2 = a[g0 & 7];
    switch (a[x2 & 7] ^ a[x3 & 7] & 3) {
    case 0:
        print_int(x2);
        x0 = x1;
        x2 = x3;
        break;
    case 1:
        x0 = g2 % (1 + ((a[x0 & 7]) & 3)) % (1 + (((g1 == x0)) & 3));
        break;
    case 2:
        a[g1 & 7] = x3 * x3;
        break;
    default:
        a[5 & 7] = a[g1 & 7];
    }
    print_int(a[g1 & 7] + x1);
    g2 = g0;
    a[g1 & 7] = 6;
    a[3 & 7] = x0;
    g1 = (4 & x2 | g1 / (1 + ((7) & 3)));
    print_int(9);
    print_int(x2 - a[x0 & 7]);
    a[a[g2 & 7] & 7] = g2;
    for (i0 = 0; i0 < 1; i0++) {
        if (x2 - a[g1 & 7] == 2) continue;
        x2 = g2 / (1 + ((g2 | 0) & 3));
        if (x1 == 2) break;
    }
    if (a[x0 & 7] - x2 < 1) {
        print_int(9 + a[g2 & 7]);
        x2 = (a[x0 & 7] - a[x0 & 7] < 0);
    }
    i0 = 0;
    while (i0 < 3) {
        x1++;
        print_int(7);
        x1 = (0 + 6 * x1 - g2);
        i0++;
    }
    switch (a[g0 & 7] - x2 & 3) {
    case 0:
        bump(g2 & g0);
        break;
    case 1:
        g0 = (a[g2 & 7] - a[g2 & 7] ^ 9);
        break;
    default:
        g0 = x3;
    }
    g0 = (a[g2 & 7] - g1 | (x3 < g1));
    a[2 & 7] = 0;
    x0 = (g0 + 5 * x0);
    x3 = h1((a[x0 & 7] < g0), x1 - g0);
    x0 = g1 % (1 + ((x0) & 3)) / (1 + ((1) & 3));
    if (g2 - x2 == 5) {
        if (x0 > 3) {
            print_int(x3 & g0);
        }
        a[x0 & 7] = (a[g1 & 7] == a[x1 & 7]);
    }
    i0 = 0;
    do {
        g2 = (x1 * x1 ^ g0 ^ a[g2 & 7]);
        i0++;
    } while (i0 < 1);
    x0--;
    if (a[g2 & 7] * 2 != 9) {
        if (g1 > 1) {
            x0 = h1((9 < g0), a[x3 & 7] / (1 + ((a[x0 & 7]) & 3)));
            bump(a[x1 & 7] * x1);
        }
    }
    a[x3 & 7] = a[x1 & 7];
    x3 = 4;
    bump(a[g0 & 7] / (1 + ((a[x0 & 7]) & 3)));
    x2 = (x3 * x0 & x1);
    if ((a[g2 & 7] < g0) > 6) {
        x2 = g0;
    } else {
        x1 = (9 | 6 | 7);
    }
    for (i0 = 0; i0 < 1; i0++) {
        x2--;
        x3 = h1(a[g0 & 7] + a[g2 & 7], a[g1 & 7] ^ a[g0 & 7]);
    }
    bump(x3);
    x3 = (5 < 3 * a[x3 & 7]);
    if (6 + 8 > 8) {
        switch (5 + x0 & 3) {
        case 0:
            g0 = g1;
        default:
            x3++;
        }
        x1 = 7;
        x2 = h0(9, a[g1 & 7] ^ x3);
    } else {
        print_int(x1 * 4);
        x3 = (g2 == 1 % (1 + ((3) & 3)));
        x0 = (x2 % (1 + ((a[g0 & 7]) & 3)) - x3);
    }
    i0 = 0;
    while (i0 < 0) {
        x2 = (a[g1 & 7] / (1 + ((x3) & 3)) + 5 % (1 + ((x3) & 3)));
        x1 = ((x3 == 8) == (a[x1 & 7] == 8));
        i0++;
    }
    g0 = g0;
    x2--;
    a[5 & 7] = g2 % (1 + ((x2) & 3));
    if (g2 / (1 + ((x3) & 3)) == 6) {
        x3 = x3;
        x0++;
        g0 = 2;
    }
    if (8 - 2 != 9) {
        bump(g1 | a[x0 & 7]);
        x3 = h0(x1, a[x2 & 7]);
        a[a[x0 & 7] & 7] = a[x2 & 7] + x1;
        bump((x0 == g1));
    } else {
        x1 = (5 == 1);
    }
    for (i0 = 0; i0 < 2; i0++) {
        i1 = 0;
        do {
            if (x2 + a[x2 & 7] == 5) {
                a[g0 & 7] = 1;
            }
            x0 = a[x3 & 7];
            i1++;
        } while (i1 < 3);
        x1 = h2(g2 & 3, 3);
    }
    i0 = 0;
    do {
        x1--;
        x2 = 0;
        i0++;
    } while (i0 < 2);
    i0 = 0;
    while (i0 < 0) {
        a[g1 & 7] = 3 % (1 + ((x0) & 3));
        g1 = (a[g2 & 7] + g0);
        i1 = 0;
        while (i1 < 1) {
            a[a[x2 & 7] & 7] = 8;
            i1++;
        }
        x1++;
        i0++;
    }
    i0 = 0;
    do {
        x0 = (x2 + a[g2 & 7] ^ a[x1 & 7]);
        x3 = (x0 < x1);
        i0++;
    } while (i0 < 2);
    i0 = 0;
    do {
        a[x0 & 7] = 3 & g1;
        g2 = x3;
        i0++;
    } while (i0 < 0);
    x2 = 7 % (1 + ((g2 * 2) & 3));
    x2 = x3;
    for (i0 = 0; i0 < 3; i0++) {
        if (2 - a[x3 & 7] == 3) continue;
        if (9 / (1 + ((a[x2 & 7]) & 3)) == 2) break;
        x1 = (x2 ^ 8);
    }
    a[x2 & 7] = x2;
    print_int(a[g2 & 7] ^ g1);
    x2 = (a[x2 & 7] == 6 & x1);
    i0 = 0;
    do {
        if (a[x1 & 7] - x0 < 8) {
            print_int(0 | a[x1 & 7]);
        }
        i1 = 0;
        do {
            if (x3 / (1 + ((g0) & 3)) == 2) break;
            print_int(g0);
            x2 = (g2 - 2);
            i1++;
        } while (i1 < 3);
        i0++;
    } while (i0 < 1);
    i0 = 0;
    do {
        x3 = (a[x2 & 7] == x1 | 7);
        i0++;
    } while (i0 < 1);
    switch (0 & 3) {
    case 0:
        i0 = 0;
        do {
            bump((x3 == g2));
            x0 = (3 * x2 * (x2 < 3));
            i0++;
        } while (i0 < 2);
    case 1:
        g1 = (9 | 2 % (1 + ((g1) & 3)));
        break;
    default:
        bump(g1);
    }
    x0--;
    if (0 % (1 + ((a[x3 & 7]) & 3)) > 5) {
        a[g1 & 7] = g1;
        x0 = (g0 - x2 | a[g1 & 7] * 0);
    } else {
        x0 = (8 + g0 * a[g1 & 7] - a[x2 & 7]);
    }
    x0--;
    x3 = a[g0 & 7] / (1 + (((1 == 6)) & 3));
    x1 = x0 - x2 / (1 + ((9 ^ 9) & 3));
    switch (a[g1 & 7] / (1 + ((g0) & 3)) & 3) {
    case 0:
        x2 = (x0 * 6 < 9);
        break;
    default:
        g0 = a[g1 & 7] - 0 / (1 + ((a[x1 & 7]) & 3));
    }
    switch (4 ^ 8 & 3) {
    case 0:
        x3--;
        break;
    default:
        x0 = (x1 - 4);
    }
    x2 = (a[g2 & 7] == 9 + a[x3 & 7]);
    a[a[x1 & 7] & 7] = (5 < 3);
    if (x1 == 9) {
        a[5 & 7] = (a[x1 & 7] < a[g2 & 7]);
        x3 = (3 * x3 < a[x3 & 7]);
    }
    switch (4 & g2 & 3) {
    case 0:
        if (x3 & x2 > 3) {
            a[g2 & 7] = a[x2 & 7];
            a[a[g0 & 7] & 7] = x3;
        }
        break;
    case 1:
        x0 = 5;
        break;
    case 2:
        x1++;
        break;
    default:
        g1 = g1;
    }
    a[0 & 7] = x1 ^ x2;
    g1 = g0;
    x1 = (x0 * a[x2 & 7] & x3 | x2);
    if (x3 ^ g1 == 4) {
        print_int(5);
        x1 = h0((g0 < x3), 5 % (1 + ((x3) & 3)));
        g0 = g1;
    }
    x1 = a[x3 & 7];
    for (i0 = 0; i0 < 2; i0++) {
        if (g0 - g2 == 0) break;
        x2 = h0(8, g1 * a[x2 & 7]);
    }
    i0 = 0;
    while (i0 < 1) {
        if (a[g2 & 7] == 3) break;
        x3--;
        if (a[x1 & 7] == 2) break;
        switch (g1 | a[g2 & 7] & 3) {
        case 0:
            x1 = h0(g1 | x1, 5 | x3);
            break;
        default:
            g2 = (a[g2 & 7] == a[x1 & 7]);
        }
        i0++;
    }
    if (x2 != 3) {
        g2 = (g0 + 2 - x0 - g1);
        x3 = (a[x0 & 7] & (x2 == 7));
        g2 = (8 % (1 + ((8) & 3)) * x1 * x3);
        g1 = ((8 < a[x3 & 7]) | a[x1 & 7]);
    } else {
        x3--;
    }
    switch (g1 / (1 + ((7) & 3)) & 3) {
    case 0:
        g0 = (x0 * x0 ^ g0 + 4);
        print_int(x1);
        break;
    case 1:
        a[a[x2 & 7] & 7] = x2;
    default:
        a[x2 & 7] = (x3 == 9);
    }
    if (x0 - 7 == 6)
        a[a[g2 & 7] & 7] = x2;
    bump(6 & 3);
    x1--;
    i0 = 0;
    while (i0 < 0) {
        g2 = (g1 == g2);
        g2 = (x2 - 6 & x2);
        x2--;
        i0++;
    }
    print_int(a[x0 & 7]);
    for (i0 = 0; i0 < 3; i0++) {
        for (i1 = 0; i1 < 2; i1++) {
            x2 = h0(a[x1 & 7] ^ a[x2 & 7], (x0 == x3));
        }
        i1 = 0;
        do {
            x3 = a[g0 & 7];
            i1++;
        } while (i1 < 1);
        print_int(x1);
    }
    i0 = 0;
    do {
        x1 = (x2 - a[x0 & 7] * 5 / (1 + ((a[g0 & 7]) & 3)));
        x0 = (x0 | x1 < a[x1 & 7] - 3);
        i0++;
    } while (i0 < 2);
    switch ((a[x0 & 7] == x1) & 3) {
    case 0:
        g1 = a[g2 & 7];
    case 1:
        x1 = x3;
        break;
    case 2:
        g1 = (0 % (1 + ((g2) & 3)) & x2 ^ 2);
        break;
    default:
        g2 = (x0 % (1 + ((g0) & 3)) ^ (x0 == 1));
    }
    i0 = 0;
    do {
        i1 = 0;
        do {
            if (3 % (1 + ((g1) & 3)) == 2) break;
            if ((1 == x1) == 2) break;
            i1++;
        } while (i1 < 0);
        x2 = 7;
        x1 = h1(g0 * 3, (7 == x1));
        i0++;
    } while (i0 < 1);
    for (i0 = 0; i0 < 1; i0++) {
        if (a[g0 & 7] ^ 1 == 2) continue;
        if (x0 / (1 + ((5) & 3)) == 1) continue;
    }
    g1 = (x0 | a[g0 & 7] < a[g0 & 7] - a[x3 & 7]);
    x1 = a[x2 & 7];
    if (6 > 0) {
        a[6 & 7] = 7 + 7;
    } else {
        x2 = x3 / (1 + ((1) & 3));
    }
    g2 = g0;
    g1 = (x1 ^ x3 ^ a[g1 & 7] % (1 + ((9) & 3)));
    x3 = x0 + a[x2 & 7] % (1 + ((g1) & 3));
    g0 = 8;
    print_int(5 % (1 + ((x0) & 3)));
    switch (7 & 3) {
    case 0:
        a[x1 & 7] = g0;
        print_int(g0);
        break;
    default:
        x1 = 3;
    }
    print_int(9);
    a[a[g2 & 7] & 7] = 0 * x2;
    i0 = 0;
    while (i0 < 1) {
        if (8 + a[x3 & 7] > 2) {
            x0 = h2(a[x3 & 7], 4 | g2);
        }
        print_int(a[g2 & 7]);
        a[g0 & 7] = g1;
        i0++;
    }
    for (i0 = 0; i0 < 0; i0++) {
        x2++;
        x2 = g1;
    }
    x0 = (x2 + 0 + 8 & x3);
    x1 = (x1 + 9);
    i0 = 0;
    do {
        for (i1 = 0; i1 < 1; i1++) {
            print_int(g1 + x0);
        }
        x0 = (x1 & 0 + a[x0 & 7] % (1 + ((x3) & 3)));
        i0++;
    } while (i0 < 3);
    if (a[g1 & 7] != 1) {
        x0--;
        a[a[x3 & 7] & 7] = 2 - x3;
        g1 = g0;
        g2 = x2;
        g2 = x0;
        print_int(g1 ^ a[x1 & 7]);
    }
    x1 = x3;
    g0 = 9 ^ g0 % (1 + ((g2 - g0) & 3));
    x0 = (5 - (3 == 0));
    switch (a[g0 & 7] + x0 & 3) {
    case 0:
        print_int(g1 ^ a[x1 & 7]);
        break;
    case 1:
        x3--;
    default:
        g2 = (5 / (1 + ((x2) & 3)) + 7);
    }
    g2 = (6 + x0 + x3);
    if (x2 + a[g2 & 7] == 7) {
        x1 = h2(4, 8);
        i0 = 0;
        while (i0 < 3) {
            x2 = a[g1 & 7];
            a[a[x3 & 7] & 7] = 8;
            g0 = a[g0 & 7];
            i0++;
        }
    } else {
        x0 = ((x1 == 3) < x2 + g2);
        switch ((6 < 2) & 3) {
        case 0:
            x3 = (5 / (1 + ((g2) & 3)) < g0 | a[g2 & 7]);
        case 1:
            x3 = (x3 + g2);
        case 2:
            bump((x1 == 5));
            break;
        default:
            a[g1 & 7] = x2;
        }
    }
    for (i0 = 0; i0 < 3; i0++) {
        if (g0 + x0 == 7) {
            x1++;
            print_int(x2);
        } else {
            x3 = 2;
        }
    }
    bump((x0 < g0));
    x3 = h2(5 % (1 + ((7) & 3)), a[x3 & 7]);
    if ((a[x0 & 7] == x3) == 3) {
        if (5 + 4 > 5) {
            g2 = (g0 == a[x3 & 7]);
            a[a[x3 & 7] & 7] = x1;
        }
    }
    i0 = 0;
    do {
        a[7 & 7] = (g2 == x0);
        g2 = (x3 ^ (3 < a[g0 & 7]));
        i0++;
    } while (i0 < 3);
    return (x0 + x1) & 255;
}
