extern void print_int(int v);

int g0 = 6;
int g1 = 9;
int g2 = 3;
int a[8] = {6, 7, 4, 8, 1, 8, 6, 8};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = v;
    if (t > 7) {
        return t - g0 % (1 + ((6) & 3));
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = v;
    if (t > 14) {
        return t - v;
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = a[g1 & 7];
    if (t > 5) {
        return t - g1;
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 7;
    x1 = 3;
    x2 = 1;
    x3 = 7;
    a[x1 & 7] = g2;
    x1 = x1;
    x3 = (5 < (8 < x2));
    x0 = h0(g0, a[g0 & 7]);
    x0 = x1 / (1 + ((g1 + 4) & 3));
    g2 = 1;
    x0 = (5 - x0 - a[g1 & 7]);
    x3 = x3;
    print_int(a[x2 & 7] | 3);
    i0 = 0;
    do {
        if (7 & x1 == 3) break;
        x0 = h0(x3, 0);
        i0++;
    } while (i0 < 1);
    g1 = x3;
    print_int(a[x1 & 7]);
    if (a[x3 & 7] * a[g2 & 7] > 2) {
        x0 = x3;
        i0 = 0;
        do {
            g1 = ((g0 < 3) < a[g1 & 7] * 8);
            i0++;
        } while (i0 < 0);
    } else {
        i0 = 0;
        do {
            if ((a[g1 & 7] == 0) == 2) break;
            i0++;
        } while (i0 < 3);
    }
    x2 = h2(x0 / (1 + ((a[x1 & 7]) & 3)), x2);
    switch ((g0 < x2) & 3) {
    case 0:
        x0 = (0 % (1 + ((a[g2 & 7]) & 3)) * 6);
        break;
    default:
        x3 = (a[g2 & 7] * 2 + x3 | a[x0 & 7]);
    }
    switch (8 - 8 & 3) {
    case 0:
        g2 = (x2 & x0 | x0 & a[x3 & 7]);
        x2--;
        break;
    case 1:
        bump(5 - g0);
        break;
    case 2:
        x0 = 3;
        break;
    default:
        x1 = (a[x1 & 7] * a[x0 & 7] == (a[x3 & 7] < x0));
    }
    for (i0 = 0; i0 < 1; i0++) {
        x1 = (a[g1 & 7] % (1 + ((2) & 3)) == (x2 == g0));
    }
    g1 = (x3 & x0 == a[g0 & 7] + g2);
    if (x0 != 3) {
        bump(2 % (1 + ((8) & 3)));
        x0 = a[g1 & 7];
        g2 = ((x3 == g0) & (a[g1 & 7] < 2));
    }
    x1 = (x0 - g2 | a[x0 & 7]);
    x0 = (a[g1 & 7] | a[x1 & 7] == x3 - a[g2 & 7]);
    g2 = (a[g2 & 7] == g0 / (1 + ((x3) & 3)));
    bump(a[g0 & 7]);
    x0++;
    if ((a[x2 & 7] < a[x1 & 7]) != 3)
        print_int(g2 | a[x1 & 7]);
    if ((g0 == 0) != 9) {
        x0 = a[g0 & 7];
        g0 = 4;
        g0 = (x3 + x2 == x0 | g2);
    }
    if (g0 != 3) {
        for (i0 = 0; i0 < 3; i0++) {
            x3 = a[g0 & 7];
        }
        print_int((x1 == a[x3 & 7]));
        x0 = 1;
        x0--;
    }
    switch (3 ^ 2 & 3) {
    case 0:
        print_int(a[x3 & 7] + 2);
        break;
    case 1:
        bump(x2);
        break;
    default:
        x3++;
    }
    x0 = h1(g0 / (1 + ((x2) & 3)), x0);
    x3 = (3 - 0 ^ x3 & a[g1 & 7]);
    if (a[g2 & 7] == 0) {
        bump((x3 == a[g1 & 7]));
        x0 = (2 == a[x2 & 7] % (1 + ((a[x3 & 7]) & 3)));
        x1++;
    } else {
        a[9 & 7] = x0 + a[g1 & 7];
        x2 = ((g1 == a[g2 & 7]) & 1);
        g2 = a[x1 & 7];
        g0 = 9;
    }
    if (5 != 6) {
        switch (0 * 7 & 3) {
        case 0:
            g1 = (g0 & 2 & x0 + 7);
            break;
        case 1:
            x0 = a[g1 & 7] % (1 + ((x1 & g1) & 3));
            break;
        case 2:
            x3 = ((a[g1 & 7] == g2) + (a[g0 & 7] == 6));
            break;
        default:
            a[x1 & 7] = x1;
        }
    } else {
        if (a[x2 & 7] % (1 + ((3) & 3)) != 8) {
            a[g2 & 7] = a[x0 & 7] & x1;
            x1 = (x0 ^ a[g0 & 7] - g0 / (1 + ((a[x2 & 7]) & 3)));
        } else {
            bump(g1 + 7);
        }
    }
    x1 = (a[x3 & 7] - x2 == (8 == g0));
    x0 = a[x3 & 7];
    print_int(2);
    i0 = 0;
    while (i0 < 3) {
        i1 = 0;
        do {
            x0 = (8 & 5 < g1);
            i1++;
        } while (i1 < 0);
        g2 = x3;
        i0++;
    }
    i0 = 0;
    do {
        a[x1 & 7] = a[g1 & 7];
        print_int(6 ^ a[g1 & 7]);
        i0++;
    } while (i0 < 3);
    x2 = a[g1 & 7];
    i0 = 0;
    while (i0 < 0) {
        switch (2 / (1 + ((3) & 3)) & 3) {
        case 0:
            print_int(x3 / (1 + ((x1) & 3)));
        case 1:
            x2 = 6;
            break;
        default:
            a[a[g1 & 7] & 7] = a[x3 & 7] + x1;
        }
        i0++;
    }
    for (i0 = 0; i0 < 2; i0++) {
        bump(g2);
    }
    a[8 & 7] = g2;
    x2++;
    i0 = 0;
    while (i0 < 1) {
        g2 = (a[x2 & 7] | 7 == a[g0 & 7] - g1);
        x1 = h0((g1 < g1), (a[x0 & 7] < 0));
        x2--;
        a[g1 & 7] = g2;
        x0++;
        bump(a[g0 & 7]);
        i0++;
    }
    g0 = ((a[x3 & 7] == a[x2 & 7]) < a[g2 & 7]);
    if (g1 == 9) {
        for (i0 = 0; i0 < 3; i0++) {
            print_int(a[x0 & 7] % (1 + ((a[x1 & 7]) & 3)));
            if (x2 != 6) {
                if ((x3 < x3) == 2) break;
                x1 = x0;
            } else {
                bump(3);
            }
        }
    } else {
        x1 = h2(a[g2 & 7] % (1 + ((a[g1 & 7]) & 3)), 8 + x0);
        x1 = x2;
    }
    for (i0 = 0; i0 < 1; i0++) {
        a[x0 & 7] = x3 ^ x0;
        i1 = 0;
        while (i1 < 1) {
            x1 = (a[x1 & 7] - (6 < 9));
            x2--;
            x2 = h1(9 + a[x2 & 7], (a[x1 & 7] < a[g0 & 7]));
            g1 = (a[g0 & 7] < 0) / (1 + ((g0) & 3));
            i1++;
        }
    }
    for (i0 = 0; i0 < 3; i0++) {
        g0 = x0 / (1 + ((a[g2 & 7] / (1 + ((a[x2 & 7]) & 3))) & 3));
        a[5 & 7] = a[x0 & 7];
        if ((g0 < x1) != 2) {
            g1 = (a[x0 & 7] * 4 * (a[g2 & 7] < 0));
            x0--;
            bump(a[g0 & 7]);
        }
    }
    x3++;
    for (i0 = 0; i0 < 2; i0++) {
        if (8 ^ a[g0 & 7] < 5)
            x0 = ((g1 < a[g0 & 7]) & x2 - x0);
        if (g0 == 0) break;
    }
    x3++;
    x1 = a[g0 & 7];
    i0 = 0;
    while (i0 < 0) {
        x3 = g2;
        x0 = ((8 < 2) == 2 | a[x1 & 7]);
        a[1 & 7] = a[x3 & 7];
        x0 = 7 / (1 + ((x2) & 3));
        i0++;
    }
    g1 = ((g2 < g0) + (a[g2 & 7] == x1));
    i0 = 0;
    do {
        x1 = (x0 | g0 | x0);
        g1 = (a[x3 & 7] % (1 + ((x0) & 3)) - 5 | a[x3 & 7]);
        bump(x0 & a[g2 & 7]);
        i0++;
    } while (i0 < 0);
    g2 = x3 % (1 + ((a[g1 & 7]) & 3));
    x3 = (9 * 1 + 4 % (1 + ((8) & 3)));
    if ((x1 < x0) == 4) {
        switch (x0 & 3) {
        case 0:
            print_int(a[x0 & 7]);
            break;
        case 1:
            print_int(x1 & x0);
            break;
        case 2:
            print_int(3 * x0);
        default:
            print_int(x1 % (1 + ((8) & 3)));
        }
    }
    a[2 & 7] = (g1 < x0);
    x0 = (5 + x1 < 5);
    if (a[x1 & 7] / (1 + ((x0) & 3)) < 6)
        x3 = (3 - (g1 < 1));
    g1 = (a[g0 & 7] % (1 + ((x3) & 3)) * g1 + a[x1 & 7]);
    x0 = 7;
    x2 = (g2 ^ 4 == 0);
    if (4 & x1 == 0) {
        print_int(g1);
    } else {
        x1 = 3;
        g0 = (a[x1 & 7] | g0);
        bump(a[x0 & 7]);
    }
    print_int(a[g1 & 7]);
    g0 = x1;
    x2 = ((2 == a[x1 & 7]) & g0 | 3);
    g0 = (4 & x2 | a[x0 & 7] * g0);
    x3 = a[x2 & 7];
    g0 = x1;
    x2 = (5 - g2);
    g1 = (g0 ^ x0);
    i0 = 0;
    while (i0 < 2) {
        x1 = (a[x2 & 7] < a[g2 & 7]) % (1 + ((4 ^ a[g0 & 7]) & 3));
        i1 = 0;
        do {
            if (g2 - 0 == 1) break;
            a[5 & 7] = g1;
            x1 = h1(a[x3 & 7], g0 * g1);
            i1++;
        } while (i1 < 1);
        i0++;
    }
    bump(3 & a[g1 & 7]);
    x2--;
    for (i0 = 0; i0 < 2; i0++) {
        if (a[x2 & 7] == 3) break;
    }
    if (g2 < 1)
        a[a[x3 & 7] & 7] = x1;
    g1 = 5;
    print_int(g2 - 1);
    a[a[x1 & 7] & 7] = g0;
    switch (8 & 6 & 3) {
    case 0:
        g1 = 3;
        break;
    case 1:
        x3 = g1;
        break;
    case 2:
        g1 = x3;
        break;
    default:
        x0 = (x3 & x0 == 1);
    }
    for (i0 = 0; i0 < 3; i0++) {
        x0 = (a[g1 & 7] - (a[g2 & 7] == 4));
        print_int((x0 == 9));
        a[5 & 7] = x2 % (1 + ((x1) & 3));
        x0 = (9 < a[x2 & 7] ^ 3);
    }
    a[a[g0 & 7] & 7] = a[g0 & 7] + g2;
    i0 = 0;
    while (i0 < 1) {
        g0 = ((a[x0 & 7] < a[x0 & 7]) * x1 % (1 + ((2) & 3)));
        i1 = 0;
        do {
            if (a[x3 & 7] & 0 == 3) break;
            i1++;
        } while (i1 < 0);
        i0++;
    }
    g2 = (x0 % (1 + ((8) & 3)) & x2);
    a[x3 & 7] = a[g0 & 7] | a[x1 & 7];
    i0 = 0;
    do {
        if (2 ^ x1 == 2) break;
        i0++;
    } while (i0 < 0);
    if (a[x3 & 7] < 8)
        x0 = (a[x3 & 7] | 1 - a[g0 & 7] - 2);
    x3--;
    x1 = a[g0 & 7];
    print_int(0 & 5);
    g2 = (3 ^ g0 | x3 * 3);
    a[x0 & 7] = g1 * x0;
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 3) {
            x3 = h1(a[g2 & 7], a[x3 & 7]);
            a[9 & 7] = (g0 == 9);
            i1++;
        }
        i0++;
    } while (i0 < 2);
    if (x1 ^ a[g2 & 7] != 4) {
        if (a[g2 & 7] + 5 == 8) {
            for (i0 = 0; i0 < 3; i0++) {
                x2 = (g2 & g0 & g1);
                g2 = a[g0 & 7];
                a[x2 & 7] = g0;
            }
        }
    }
    x2 = h1(5 + a[g1 & 7], 9 + a[g0 & 7]);
    x0 = h0((x1 == x3), x0 / (1 + ((x1) & 3)));
    for (i0 = 0; i0 < 3; i0++) {
        g2 = (x1 < 8);
        print_int(a[g0 & 7] * 2);
    }
    i0 = 0;
    do {
        g1 = a[g1 & 7] / (1 + ((1) & 3)) / (1 + ((g2 + x2) & 3));
        i0++;
    } while (i0 < 3);
    if (g1 / (1 + ((x1) & 3)) == 7) {
        i0 = 0;
        while (i0 < 2) {
            if (x1 == 2) break;
            a[x1 & 7] = g1 - 8;
            g1 = (x2 + a[x3 & 7] * 7 ^ g2);
            g2 = ((x2 == x3) + x1 + g1);
            i0++;
        }
    }
    x0--;
    for (i0 = 0; i0 < 1; i0++) {
        a[2 & 7] = x0 % (1 + ((a[x3 & 7]) & 3));
        if ((6 < x0) == 7) {
            x0 = h0(9 - g0, g2);
            g0 = a[x2 & 7];
        }
    }
    x2 = h2(x3 + g2, x2);
    x3 = x2;
    i0 = 0;
    do {
        a[x3 & 7] = 8 | 7;
        i0++;
    } while (i0 < 0);
    if (x0 * 8 != 0) {
        if (a[x3 & 7] / (1 + ((a[g2 & 7]) & 3)) > 7) {
            print_int(a[g0 & 7] & x0);
            x3--;
        } else {
            g2 = ((6 == a[x2 & 7]) | g0);
            x2 = 7;
        }
    }
    a[x0 & 7] = 6 ^ a[g2 & 7];
    switch (0 ^ a[x0 & 7] & 3) {
    case 0:
        x2--;
        break;
    case 1:
        g1 = (2 & g1 ^ a[x2 & 7]);
    default:
        x1 = (x3 + x0 == x1 | x2);
    }
    x0--;
    g1 = 9 & g1 / (1 + ((x0) & 3));
    x2--;
    if (a[g0 & 7] == 3) {
        g2 = (g0 ^ a[g2 & 7] - x3);
        x2 = (1 * (a[x2 & 7] < x0));
    }
    i0 = 0;
    while (i0 < 0) {
        x3 = (0 & g0 - 4);
        i1 = 0;
        do {
            if (x0 + 6 == 1) break;
            g1 = 6;
            a[x2 & 7] = g0;
            i1++;
        } while (i1 < 1);
        i0++;
    }
    if (g1 + g1 != 9) {
        x2 = 7 % (1 + ((7) & 3)) % (1 + ((a[x3 & 7] % (1 + ((a[g2 & 7]) & 3))) & 3));
    }
    x3 = x0;
    x2 = h0(a[g0 & 7] & g1, a[g1 & 7] % (1 + ((x3) & 3)));
    x3 = a[g2 & 7];
    for (i0 = 0; i0 < 1; i0++) {
        if (g2 == 1) continue;
        i1 = 0;
        while (i1 < 0) {
            print_int((x0 < g0));
            x2 = (g0 - (a[x0 & 7] < x2));
            i1++;
        }
    }
    if (a[x2 & 7] + x1 > 6) {
        g1 = x2 * a[x1 & 7] / (1 + ((a[g1 & 7] * a[x1 & 7]) & 3));
        x1 = 6 / (1 + ((a[g1 & 7] & x2) & 3));
        g2 = 2;
        print_int(x1 * a[x3 & 7]);
    } else {
        g1 = (3 * 7 - x0 + g1);
        x0 = (g1 + a[g0 & 7] % (1 + ((4) & 3)));
        x1++;
        g0 = g2 + 8 % (1 + ((a[x3 & 7] + a[g0 & 7]) & 3));
    }
    x1 = 4;
    bump((a[g1 & 7] == 4));
    bump(1 % (1 + ((g0) & 3)));
    for (i0 = 0; i0 < 1; i0++) {
        a[8 & 7] = x2;
    }
    i0 = 0;
    do {
        x1--;
        x3 = ((x2 < g2) == 0);
        i0++;
    } while (i0 < 0);
    bump(2 | a[g0 & 7]);
    g0 = g0;
    g0 = g2 * g0 % (1 + ((7 / (1 + ((g1) & 3))) & 3));
    x3 = (6 * x1 < 5 + g2);
    if (x3 ^ x1 == 8) {
        g1 = (2 * 1 - 7);
        g1 = (x0 & 3 - 2);
    }
    switch (g1 ^ x1 & 3) {
    case 0:
        x1 = (7 < a[x3 & 7]) / (1 + ((a[x2 & 7] % (1 + ((5) & 3))) & 3));
        x2 = h0(g0, x0 & a[g1 & 7]);
        break;
    default:
        a[x3 & 7] = a[x0 & 7];
    }
    if (x3 % (1 + ((2) & 3)) == 8) {
        g2 = (2 - 7 & g2 - g1);
        bump(a[g0 & 7] ^ a[x1 & 7]);
        g1 = 7;
        x2 = (x0 ^ a[g0 & 7] == a[g0 & 7] - x1);
    } else {
        g0 = 6;
        x0 = h0(g1, g2 % (1 + ((g2) & 3)));
        a[x1 & 7] = 9 | a[x2 & 7];
    }
    print_int(4 | x1);
    for (i0 = 0; i0 < 3; i0++) {
        if (x1 & x3 > 2) {
            g2 = 9 ^ 7 % (1 + ((g0 & x3) & 3));
        }
        x3 = h0(a[g2 & 7] ^ x2, 2 % (1 + ((2) & 3)));
    }
    i0 = 0;
    while (i0 < 0) {
        for (i1 = 0; i1 < 2; i1++) {
            print_int(a[x3 & 7] & g2);
            a[x0 & 7] = (3 < a[x0 & 7]);
        }
        i1 = 0;
        do {
            if ((x1 == 5) == 1) break;
            g1 = 9 % (1 + ((4) & 3)) % (1 + ((a[x3 & 7] / (1 + ((a[g1 & 7]) & 3))) & 3));
            i1++;
        } while (i1 < 3);
        i0++;
    }
    x0 = h0(a[g0 & 7], g0 & g1);
    g0 = (1 * a[x0 & 7]);
    for (i0 = 0; i0 < 1; i0++) {
        bump(0);
    }
    x2 = (a[x2 & 7] - x2 | 3);
    g1 = g0;
    g0 = a[g0 & 7];
    i0 = 0;
    do {
        i1 = 0;
        do {
            x3 = (a[g1 & 7] < g0 & a[g2 & 7]);
            print_int(a[g2 & 7]);
            i1++;
        } while (i1 < 0);
        i0++;
    } while (i0 < 0);
    x3 = h0(g0, 8);
    switch (g1 | a[g0 & 7] & 3) {
    case 0:
        x2 = 0;
        break;
    case 1:
        x2++;
        break;
    case 2:
        x2 = x1 % (1 + ((6 | 7) & 3));
        break;
    default:
        x3 = (a[x3 & 7] * x2 ^ x1);
    }
    if ((g2 < 1) != 8) {
        print_int(9);
        g0 = (7 & x2 | a[x1 & 7]);
        if (x0 != 0) {
            x0 = h0(g2 ^ a[x1 & 7], (g1 < 6));
            g2 = (g0 | a[x0 & 7] * x1);
        } else {
            x2--;
        }
    }
    if (5 / (1 + ((g0) & 3)) > 6) {
        g1 = (1 | 0);
        x2 = (9 - 2 - a[x2 & 7] - 3);
        x3--;
        x1 = (x1 == x1) / (1 + ((g1 / (1 + ((8) & 3))) & 3));
    }
    switch (g0 * g0 & 3) {
    case 0:
        bump(x0 / (1 + ((a[g0 & 7]) & 3)));
        x1 = x1;
        x0 = 2;
        break;
    default:
        g1 = 6;
    }
    x2 = h2((x0 < a[x2 & 7]), 7 / (1 + ((a[g1 & 7]) & 3)));
    x1 = g0;
    for (i0 = 0; i0 < 1; i0++) {
        if ((6 == 5) == 0) break;
        g2 = a[x3 & 7];
        print_int(g0 % (1 + ((g2) & 3)));
        if (x2 / (1 + ((6) & 3)) == 5) {
            if (x1 - 2 == 2) break;
        }
        x1++;
    }
    if (g2 + g0 != 4) {
        switch (g2 & 3) {
        case 0:
            x2 = a[x0 & 7];
        case 1:
            x3++;
            break;
        default:
            print_int(x3 * x0);
        }
    } else {
        i0 = 0;
        while (i0 < 3) {
            switch (2 + x2 & 3) {
            case 0:
                x3--;
                break;
            default:
                x3 = h0((a[g2 & 7] < 0), a[x1 & 7]);
            }
            i0++;
        }
    }
    g0 = (7 < a[x3 & 7]) % (1 + ((a[x0 & 7] / (1 + ((a[g2 & 7]) & 3))) & 3));
    a[4 & 7] = a[x1 & 7] ^ 9;
    switch (g2 & 3) {
    case 0:
        g2 = g0;
        x1 = (g2 + 8 | a[g0 & 7] / (1 + ((a[x0 & 7]) & 3)));
        x1 = ((a[x2 & 7] < 8) + a[g2 & 7]);
        break;
    case 1:
        bump(x3 | g0);
    default:
        a[0 & 7] = x2;
    }
    x2 = a[x2 & 7];
    if (0 < 8)
        g2 = a[x2 & 7] + a[x1 & 7] % (1 + ((a[x1 & 7]) & 3));
    x3 = (6 ^ g2 / (1 + ((x1) & 3)));
    bump(a[g0 & 7]);
    x1 = 3;
    print_int(x1);
    i0 = 0;
    while (i0 < 0) {
        i1 = 0;
        do {
            x2 = (g2 == x3) / (1 + ((g1 * x2) & 3));
            x3 = (g2 + 9 | x0);
            i1++;
        } while (i1 < 1);
        i0++;
    }
    if (a[x0 & 7] | a[x2 & 7] != 9) {
        print_int(2 ^ x0);
        g1 = (x0 + 9 + 2);
        a[7 & 7] = 6;
    }
    i0 = 0;
    while (i0 < 3) {
        bump(x3 ^ 7);
        x1 = (x3 + a[g0 & 7] - 7);
        g2 = ((g1 < 4) | a[x0 & 7] | a[g0 & 7]);
        i0++;
    }
    x2 = ((8 == x1) ^ x3);
    print_int(g1);
    a[8 & 7] = g1 | 0;
    g0 = g2;
    i0 = 0;
    while (i0 < 0) {
        g2 = ((x0 < g1) * 7 & a[x1 & 7]);
        x1++;
        i0++;
    }
    x2 = (4 * 6 ^ x3 - a[g0 & 7]);
    for (i0 = 0; i0 < 2; i0++) {
        x1 = (x3 - a[g0 & 7] * g0);
        i1 = 0;
        while (i1 < 3) {
            a[g0 & 7] = 7;
            i1++;
        }
        x2 = (1 ^ x1);
        if ((x1 < 4) == 0) break;
    }
    x3++;
    i0 = 0;
    do {
        x0--;
        i0++;
    } while (i0 < 2);
    x3 = h0(3, a[x0 & 7] & x2);
    x3 = 0;
    x1--;
    a[g0 & 7] = x1;
    g1 = (g2 * x1);
    a[g2 & 7] = 3 * a[g2 & 7];
    i0 = 0;
    do {
        x3 = x2;
        a[x1 & 7] = a[x1 & 7];
        i0++;
    } while (i0 < 0);
    i0 = 0;
    do {
        x2--;
        if (7 == 1) break;
        x3--;
        i0++;
    } while (i0 < 1);
    i0 = 0;
    do {
        g2 = (0 < a[g0 & 7] ^ g2);
        x1 = (g1 * 4 ^ a[g2 & 7]);
        x1 = (a[g2 & 7] * a[g0 & 7] - (g2 < x3));
        i0++;
    } while (i0 < 2);
    i0 = 0;
    while (i0 < 2) {
        if (9 > 6) {
            a[x2 & 7] = g1;
            x1 = g1;
        } else {
            x3 = h2(x3 - x3, (g2 < g1));
            g1 = (a[g0 & 7] + x3 / (1 + ((g0) & 3)));
        }
        i0++;
    }
    i0 = 0;
    while (i0 < 0) {
        print_int(a[g2 & 7] ^ 0);
        i0++;
    }
    i0 = 0;
    do {
        for (i1 = 0; i1 < 0; i1++) {
            if (9 - x1 == 1) continue;
        }
        x3 = h0(g0 ^ a[x1 & 7], x0);
        g0 = (g2 - (x3 < 7));
        i0++;
    } while (i0 < 2);
    i0 = 0;
    while (i0 < 1) {
        switch (9 / (1 + ((a[g2 & 7]) & 3)) & 3) {
        case 0:
            g2 = (a[g2 & 7] & a[g1 & 7] == 6 / (1 + ((g0) & 3)));
            x0 = (0 == 0 + x3);
        default:
            print_int(g1);
        }
        g2 = x1;
        i0++;
    }
    if (x3 > 2) {
        x2 = (x1 * x1 - 7 % (1 + ((x1) & 3)));
    }
    x3 = (a[g1 & 7] & 6 & x3);
    return (x0 + x1) & 255;
}
