extern void print_int(int v);

int g0 = 0;
int g1 = 3;
int g2 = 3;
int a[8] = {6, 5, 0, 2, 0, 2, 1, 2};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = 5;
    if (t > 19) {
        return t - g1 ^ 6;
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = g0;
    if (t > 3) {
        return t - 4 + a[v & 7];
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = a[g0 & 7];
    if (t > 19) {
        return t - u ^ g0;
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 8;
    x1 = 3;
    x2 = 1;
    x3 = 0;
    for (i0 = 0; i0 < 3; i0++) {
        if (a[x1 & 7] * g0 == 0) break;
        i1 = 0;
        while (i1 < 1) {
            print_int(1);
            i1++;
        }
        x1 = g1;
        x0 = 6;
    }
    if (3 & x1 > 9) {
        print_int(4 + g2);
        i0 = 0;
        do {
            g0 = (g2 - 1 % (1 + ((x1) & 3)));
            if (g2 - a[g1 & 7] == 0) break;
            x1++;
            i0++;
        } while (i0 < 3);
    }
    g1 = g0;
    for (i0 = 0; i0 < 1; i0++) {
        print_int(1);
        g0 = x0;
    }
    x3 = a[x3 & 7];
    if (g0 % (1 + ((x0) & 3)) == 2) {
        print_int(a[x1 & 7]);
        x1 = h1(g0 | x0, a[x0 & 7]);
        for (i0 = 0; i0 < 1; i0++) {
            x3 = (4 & x0);
        }
        x1 = h1(a[x0 & 7] ^ g2, 6 & 8);
    }
    x2++;
    i0 = 0;
    do {
        g2 = (a[x1 & 7] ^ x0 | 0);
        if (g0 * a[x2 & 7] == 0) break;
        i0++;
    } while (i0 < 1);
    switch (a[g0 & 7] & 3) {
    case 0:
        x3 = 1;
        x2++;
        g0 = a[g0 & 7];
    default:
        a[a[x3 & 7] & 7] = 5;
    }
    print_int(4 + 9);
    x2++;
    x0--;
    i0 = 0;
    do {
        x2 = g0;
        x2 = (a[x0 & 7] - x3 & g1 * 9);
        a[x0 & 7] = x0 + g2;
        i0++;
    } while (i0 < 1);
    g2 = g2;
    x0++;
    x1 = (5 + a[x1 & 7] & x0);
    x3 = 3 - a[g1 & 7] % (1 + ((x1) & 3));
    if (g1 < 9) {
        print_int(a[x0 & 7] / (1 + ((g1) & 3)));
        g0 = (a[g0 & 7] + a[g1 & 7] | g0 & x0);
    } else {
        x3 = (1 % (1 + ((8) & 3)) - 7);
        x0 = 4;
    }
    x1++;
    i0 = 0;
    do {
        if (x3 - x1 > 0) {
            x0 = (x0 ^ g2 ^ x2);
            a[9 & 7] = x3;
        }
        i0++;
    } while (i0 < 3);
    a[8 & 7] = x3 & x1;
    g1 = (a[x3 & 7] == 4) % (1 + ((a[x0 & 7] | a[g2 & 7]) & 3));
    x2 = (8 + x1 * a[x0 & 7] & 5);
    if (x0 != 5) {
        if (a[g0 & 7] != 4) {
            print_int(6 | a[x0 & 7]);
        }
        x0 = (g0 | a[x2 & 7] * 0 ^ 1);
        print_int(g1 % (1 + ((x2) & 3)));
        print_int(4 - 1);
        x1 = g0;
    } else {
        i0 = 0;
        do {
            a[x1 & 7] = a[g0 & 7];
            i0++;
        } while (i0 < 1);
    }
    g2 = a[g0 & 7];
    x3 = g2;
    switch (8 / (1 + ((6) & 3)) & 3) {
    case 0:
        print_int(2 ^ a[g1 & 7]);
    case 1:
        x3 = (g2 % (1 + ((x1) & 3)) ^ 4);
        break;
    case 2:
        x0 = (x0 ^ 9 & (x1 < 9));
    default:
        print_int((6 < 8));
    }
    g1 = (0 | 2 == 2);
    for (i0 = 0; i0 < 0; i0++) {
        print_int(x2);
    }
    bump(4);
    for (i0 = 0; i0 < 1; i0++) {
        if (a[x0 & 7] == 1) break;
        if (g1 | x2 == 3) continue;
    }
    print_int(3);
    i0 = 0;
    do {
        x2--;
        x0 = x0;
        g0 = (g0 % (1 + ((x3) & 3)) - a[x3 & 7]);
        g0 = (g2 == 8 ^ a[x2 & 7]);
        g1 = (4 % (1 + ((x0) & 3)) - x3);
        i0++;
    } while (i0 < 1);
    if (a[x1 & 7] % (1 + ((x0) & 3)) == 4) {
        x3 = (0 & (g2 == g0));
        g0 = (a[g1 & 7] ^ 9 ^ 5);
    }
    x3 = (x0 - x0 | (g1 == a[g2 & 7]));
    x0 = 4;
    i0 = 0;
    do {
        x3 = 5;
        x3 = g1;
        x2 = h2(9 & a[g1 & 7], a[g2 & 7] ^ 5);
        i0++;
    } while (i0 < 0);
    x0++;
    g2 = (5 ^ 4 / (1 + ((a[x1 & 7]) & 3)));
    for (i0 = 0; i0 < 2; i0++) {
        x2--;
        g2 = (5 | g2);
    }
    for (i0 = 0; i0 < 2; i0++) {
        print_int((9 < a[g2 & 7]));
        switch (x3 ^ x1 & 3) {
        case 0:
            g2 = a[x3 & 7] % (1 + ((a[g1 & 7] % (1 + ((g0) & 3))) & 3));
            break;
        case 1:
            g0 = (5 + g0);
            break;
        case 2:
            bump(a[g0 & 7] + a[g0 & 7]);
            break;
        default:
            a[9 & 7] = x0 * x0;
        }
    }
    x1--;
    g1 = ((x0 == a[x1 & 7]) * a[g1 & 7] - 8);
    a[x3 & 7] = (5 < 1);
    g2 = (1 & x0 - x2 / (1 + ((g1) & 3)));
    if (8 == 0) {
        g0 = a[x1 & 7];
    }
    x3 = (g2 - a[g0 & 7]);
    i0 = 0;
    do {
        x1 = g2;
        x2 = a[x1 & 7] * x3 % (1 + ((4 / (1 + ((1) & 3))) & 3));
        i1 = 0;
        while (i1 < 0) {
            x1 = (g0 / (1 + ((5) & 3)) | x2);
            i1++;
        }
        i0++;
    } while (i0 < 2);
    x2--;
    g0 = 1 | a[g2 & 7] / (1 + (((a[g2 & 7] < x0)) & 3));
    x2 = a[x1 & 7] & x0 / (1 + ((a[x2 & 7]) & 3));
    for (i0 = 0; i0 < 3; i0++) {
        i1 = 0;
        do {
            x0--;
            i1++;
        } while (i1 < 3);
        if (8 & g2 == 1) break;
        print_int(g0 ^ 5);
    }
    g0 = 7;
    x3 = a[x2 & 7];
    a[4 & 7] = x1 % (1 + ((6) & 3));
    g2 = g1;
    g2 = x3 % (1 + ((g1 & x0) & 3));
    x3 = h0(x0 * a[g2 & 7], x3 / (1 + ((a[x3 & 7]) & 3)));
    g2 = a[g2 & 7] | 9 / (1 + ((g0 & a[x1 & 7]) & 3));
    if (5 & g2 > 7) {
        i0 = 0;
        while (i0 < 0) {
            if (g1 % (1 + ((5) & 3)) == 3) break;
            i0++;
        }
        x1 = x1 * 6 % (1 + ((x2 - 7) & 3));
        g1 = 8;
    }
    i0 = 0;
    while (i0 < 2) {
        bump(5);
        x0++;
        for (i1 = 0; i1 < 0; i1++) {
            if (5 / (1 + ((3) & 3)) == 0) continue;
            bump(0 & a[x0 & 7]);
        }
        i0++;
    }
    if (3 - g1 > 6) {
        if ((a[x0 & 7] < x0) > 4) {
            g0 = 6;
            x1 = h1(g0, a[g0 & 7]);
        }
        g1 = x0;
        x0++;
    }
    print_int(a[x3 & 7] / (1 + ((a[g0 & 7]) & 3)));
    g2 = x3;
    x1++;
    x1 = (x0 - a[x1 & 7] | g1);
    g2 = 9;
    x0 = (a[g2 & 7] | g0 - a[g0 & 7]);
    print_int(2);
    g1 = (x1 - 7 * 8 - 7);
    switch ((x3 < x2) & 3) {
    case 0:
        g0 = (a[x0 & 7] | 5 * a[x0 & 7]);
        x3 = a[x3 & 7];
        break;
    case 1:
        g2 = a[x2 & 7] / (1 + ((1 - x3) & 3));
    case 2:
        a[g2 & 7] = g2 - x2;
        break;
    default:
        x1 = (a[x0 & 7] ^ 3 & x0 / (1 + ((a[x0 & 7]) & 3)));
    }
    g1 = 7 | 7 % (1 + ((0) & 3));
    i0 = 0;
    do {
        i1 = 0;
        do {
            if (x1 & g2 == 2) {
                bump(0 / (1 + ((9) & 3)));
            }
            if (4 * x1 == 3) break;
            x3 = a[g0 & 7];
            i1++;
        } while (i1 < 2);
        i0++;
    } while (i0 < 2);
    for (i0 = 0; i0 < 2; i0++) {
        switch (a[x3 & 7] + 1 & 3) {
        case 0:
            bump(x2);
            break;
        case 1:
            g1 = (g0 == x0) % (1 + ((g0) & 3));
        case 2:
            print_int(a[g0 & 7]);
        default:
            x1 = h1(g0 & g2, (7 == x1));
        }
    }
    x2 = h2(x3 | x0, 0 * a[g1 & 7]);
    x1 = x1;
    switch (g1 / (1 + ((4) & 3)) & 3) {
    case 0:
        x3 = 6 % (1 + ((a[x3 & 7] ^ a[g1 & 7]) & 3));
    case 1:
        bump(x0 / (1 + ((a[x3 & 7]) & 3)));
        break;
    default:
        print_int(a[x0 & 7] % (1 + ((x1) & 3)));
    }
    g1 = (g0 == 4) / (1 + (((a[x1 & 7] == 8)) & 3));
    x2 = h0(3 | x1, g1);
    for (i0 = 0; i0 < 2; i0++) {
        x3 = ((x2 < a[x0 & 7]) == a[g2 & 7] | a[g1 & 7]);
        x0 = 5;
        print_int(g2 & x2);
        x0--;
        x2 = h2(g0 * 0, 5);
    }
    switch (x3 % (1 + ((a[g0 & 7]) & 3)) & 3) {
    case 0:
        g0 = (a[g0 & 7] ^ 2);
        bump(x1);
        g1 = x2;
    case 1:
        x3 = 5;
        break;
    case 2:
        x1 = (9 == 4);
        break;
    default:
        x2 = a[g2 & 7];
    }
    i0 = 0;
    do {
        g0 = (x3 | a[x1 & 7] / (1 + ((6) & 3)));
        g0 = (2 % (1 + ((a[g1 & 7]) & 3)) - 1);
        g2 = a[g2 & 7] & a[x0 & 7] / (1 + ((a[g0 & 7]) & 3));
        x3 = (9 == g2);
        i0++;
    } while (i0 < 1);
    i0 = 0;
    while (i0 < 1) {
        bump(a[g0 & 7]);
        i1 = 0;
        while (i1 < 1) {
            if (x1 == 3) break;
            x2 = 4 * a[x2 & 7] / (1 + ((x1) & 3));
            i1++;
        }
        i0++;
    }
    g2 = (a[g0 & 7] / (1 + ((g2) & 3)) - x0);
    x2 = (4 == x3 / (1 + ((x2) & 3)));
    i0 = 0;
    while (i0 < 2) {
        g1 = 0;
        g0 = a[g0 & 7];
        i0++;
    }
    g2 = (a[x0 & 7] + g2 ^ a[g1 & 7]);
    i0 = 0;
    do {
        x2 = a[g1 & 7];
        bump(2 | 5);
        x3 = (a[g1 & 7] - 7 | x2);
        a[a[x1 & 7] & 7] = a[g1 & 7];
        g2 = g2;
        g0 = a[g1 & 7] - 2 % (1 + (((x0 < a[g2 & 7])) & 3));
        i0++;
    } while (i0 < 1);
    g1 = (x3 - g0);
    print_int((x1 < x2));
    g0 = 4 % (1 + ((0 ^ a[x3 & 7]) & 3));
    i0 = 0;
    do {
        i1 = 0;
        do {
            x1 = g2;
            x1 = (x2 & g0 | x3 & x2);
            i1++;
        } while (i1 < 1);
        i0++;
    } while (i0 < 3);
    g2 = x0;
    a[a[g2 & 7] & 7] = x0;
    g1 = (4 | x2 ^ x2 - x2);
    a[6 & 7] = a[g1 & 7] - g2;
    print_int(a[x2 & 7]);
    x3++;
    g0 = 1;
    g0 = 1 % (1 + ((x2 & g0) & 3));
    x2 = (0 % (1 + ((g0) & 3)) & g1 + a[g2 & 7]);
    g1 = (3 & g2 | x0 | g0);
    switch (g0 - 9 & 3) {
    case 0:
        print_int(a[x3 & 7] * 3);
        break;
    case 1:
        g1 = ((0 < 5) + (g0 < x2));
        break;
    default:
        g0 = (x1 - x2 / (1 + ((6) & 3)));
    }
    x0 = a[g0 & 7];
    i0 = 0;
    do {
        i1 = 0;
        do {
            x0 = (a[g2 & 7] + x1 & g1);
            x1 = a[x1 & 7];
            i1++;
        } while (i1 < 1);
        i0++;
    } while (i0 < 3);
    x3 = (a[x0 & 7] ^ g1);
    print_int(g1 - a[x0 & 7]);
    i0 = 0;
    while (i0 < 3) {
        x2++;
        x3 = (4 * 6 ^ g0);
        g1 = ((x0 == 4) < a[g2 & 7] | a[x3 & 7]);
        i0++;
    }
    a[x3 & 7] = a[x0 & 7];
    x3 = x1;
    a[7 & 7] = x0 + a[g2 & 7];
    x0 = (5 | g2 | x0);
    if (x3 - a[x1 & 7] != 1)
        bump(x1 ^ g1);
    if (7 == 9) {
        x3 = h0(0 | a[g1 & 7], 9 / (1 + ((g0) & 3)));
        g2 = a[g2 & 7];
        g1 = a[x1 & 7];
    }
    x0 = g2;
    if (5 == 7) {
        g0 = x1;
    } else {
        x2 = (a[x1 & 7] ^ 1 | x0 / (1 + ((6) & 3)));
        for (i0 = 0; i0 < 0; i0++) {
            x0 = (a[x3 & 7] % (1 + ((x2) & 3)) ^ a[g1 & 7]);
            x1 = h0(a[g2 & 7], 9 ^ 8);
        }
    }
    a[a[x2 & 7] & 7] = g2;
    x3 = h0(a[g0 & 7] - 0, 7);
    g1 = (0 | x1 ^ 8 & g1);
    bump(9 & a[x2 & 7]);
    g2 = (5 + a[g0 & 7] / (1 + ((a[x3 & 7]) & 3)));
    a[a[x1 & 7] & 7] = x0;
    bump(9 | g0);
    g2 = x2;
    x3 = (a[g0 & 7] & a[x0 & 7] - x0 % (1 + ((g2) & 3)));
    x1 = (0 & a[x3 & 7] * g1);
    x1 = (x2 - (x1 == 8));
    for (i0 = 0; i0 < 0; i0++) {
        if (7 ^ 3 == 1) break;
        i1 = 0;
        do {
            if (5 / (1 + ((7) & 3)) == 2) break;
            x0 = (a[x1 & 7] % (1 + ((a[x1 & 7]) & 3)) - a[g1 & 7] & 3);
            i1++;
        } while (i1 < 0);
        bump(2 | a[g0 & 7]);
    }
    g0 = (g1 & 8 - a[x2 & 7] ^ a[x2 & 7]);
    for (i0 = 0; i0 < 1; i0++) {
        a[a[g1 & 7] & 7] = a[x0 & 7] - a[x1 & 7];
    }
    i0 = 0;
    while (i0 < 0) {
        a[0 & 7] = 8 | g0;
        if (x2 * 5 < 0)
            bump((6 == g2));
        if (g0 | x1 == 1) break;
        x1 = h1(x3 + a[x1 & 7], a[x1 & 7]);
        i0++;
    }
    x1 = (x3 + x0 ^ 7);
    g2 = (a[x2 & 7] * x3 * 5);
    switch (7 & 3) {
    case 0:
        x1 = (2 % (1 + ((g2) & 3)) & 5);
        break;
    case 1:
        x1++;
    default:
        x0 = a[g2 & 7];
    }
    x2 = 4;
    g0 = ((a[x2 & 7] == g1) | g1);
    print_int((a[x2 & 7] < a[x0 & 7]));
    g2 = (a[g1 & 7] % (1 + ((a[g2 & 7]) & 3)) | a[x0 & 7]);
    x0 = 3;
    bump(a[g1 & 7]);
    a[1 & 7] = (a[x1 & 7] < a[x2 & 7]);
    i0 = 0;
    while (i0 < 2) {
        x0++;
        i0++;
    }
    i0 = 0;
    do {
        x1 = x0;
        a[g0 & 7] = x1 * x1;
        if (g1 * 6 == 3) break;
        i0++;
    } while (i0 < 2);
    if (g1 - 4 > 4) {
        x0 = ((6 < g1) == g0 + a[x2 & 7]);
    }
    g2 = (x3 % (1 + ((6) & 3)) == (x3 == x1));
    if ((g1 == a[g2 & 7]) != 5) {
        if (x2 < 2) {
            a[x2 & 7] = (a[g0 & 7] < a[g2 & 7]);
            a[a[g1 & 7] & 7] = 6;
            a[x3 & 7] = g2 * a[x3 & 7];
        } else {
            x1 = (g2 + g1 * g2);
        }
        x3 = (4 / (1 + ((g0) & 3)) == x3 % (1 + ((g1) & 3)));
    }
    if ((x1 == g1) != 2) {
        i0 = 0;
        while (i0 < 1) {
            switch (a[x3 & 7] % (1 + ((g1) & 3)) & 3) {
            case 0:
                x3 = (x3 < g1 | x3);
                break;
            default:
                x1 = 4;
            }
            i0++;
        }
        x0--;
    }
    a[x2 & 7] = 5 % (1 + ((a[x3 & 7]) & 3));
    x3 = (a[g1 & 7] == 2 & 8);
    g1 = (a[x0 & 7] ^ 4 < x0);
    x3++;
    x1 = (3 % (1 + ((a[x2 & 7]) & 3)) + 6);
    g0 = 5;
    for (i0 = 0; i0 < 3; i0++) {
        a[8 & 7] = x1;
        if (0 == 1) continue;
    }
    if ((5 < x2) != 7) {
        x0 = (g1 ^ x2 % (1 + ((g1) & 3)));
        switch (x3 + a[g0 & 7] & 3) {
        case 0:
            print_int(a[x2 & 7] ^ g0);
            break;
        case 1:
            x3 = (g1 ^ x0 - a[x1 & 7]);
        default:
            a[7 & 7] = x1 - 6;
        }
        x1 = (a[x0 & 7] / (1 + ((x2) & 3)) < g2 & 4);
    }
    x1 = g2;
    i0 = 0;
    do {
        print_int(x2);
        a[g2 & 7] = x2;
        x0 = (a[x3 & 7] - a[g0 & 7] * x1 + g1);
        i0++;
    } while (i0 < 0);
    if ((x3 < a[x0 & 7]) != 8) {
        x0 = (a[g0 & 7] | (a[x3 & 7] == x0));
        print_int(x0);
    }
    a[g1 & 7] = g2 + g0;
    if (a[x2 & 7] % (1 + ((x0) & 3)) > 2) {
        x0 = a[g1 & 7];
    } else {
        g2 = a[x0 & 7];
        a[x1 & 7] = x2 | g1;
        x3 = (9 - a[g2 & 7] + g1 / (1 + ((x3) & 3)));
        x0 = x3;
    }
    x2++;
    a[a[x3 & 7] & 7] = 9 % (1 + ((2) & 3));
    i0 = 0;
    while (i0 < 3) {
        a[x3 & 7] = a[x1 & 7];
        if ((a[g1 & 7] < g1) == 3) break;
        print_int(x3 & x1);
        x0 = (1 / (1 + ((x0) & 3)) ^ x3 & 4);
        x0++;
        i0++;
    }
    print_int(g0 & g2);
    bump(a[x3 & 7] % (1 + ((g0) & 3)));
    print_int(0 * 1);
    x3 = 8;
    i0 = 0;
    while (i0 < 2) {
        if (x0 ^ 9 != 9) {
            x3 = (2 - a[g2 & 7] + (1 < a[x0 & 7]));
            x0 = a[g2 & 7];
            x0 = ((a[x3 & 7] == 3) ^ (a[g2 & 7] < g1));
        }
        i0++;
    }
    g0 = (g1 - 8 + x1 + 3);
    for (i0 = 0; i0 < 2; i0++) {
        x3++;
        x2++;
        x2 = (x1 + 6 < a[g1 & 7] * 3);
        if ((x2 == a[x3 & 7]) == 3) continue;
    }
    a[8 & 7] = (3 == a[g0 & 7]);
    if ((a[x2 & 7] == 9) != 6) {
        for (i0 = 0; i0 < 1; i0++) {
            x1 = 5;
            g2 = (g0 ^ 7 ^ g1);
        }
    }
    for (i0 = 0; i0 < 3; i0++) {
        x0 = x3;
        print_int(g1 ^ a[g2 & 7]);
        g0 = (a[g0 & 7] / (1 + ((g0) & 3)) + 6);
    }
    for (i0 = 0; i0 < 3; i0++) {
        x2 = (a[x3 & 7] / (1 + ((a[g0 & 7]) & 3)) == a[x1 & 7] % (1 + ((g1) & 3)));
        print_int(x2 / (1 + ((x1) & 3)));
    }
    x0 = h0(a[x1 & 7] / (1 + ((x2) & 3)), a[g0 & 7]);
    if (x3 < 5) {
        if (g1 | g2 == 0) {
            g0 = a[x2 & 7] & 3 % (1 + ((a[x2 & 7] + a[x2 & 7]) & 3));
            a[1 & 7] = 9 & 3;
            bump(g2 / (1 + ((0) & 3)));
        }
    } else {
        bump(a[g2 & 7] & 8);
    }
    switch (5 | x1 & 3) {
    case 0:
        x2 = (x2 == x2) % (1 + ((6 ^ g1) & 3));
        break;
    case 1:
        x3 = ((x1 == a[g0 & 7]) ^ g2);
        break;
    case 2:
        x2 = (a[g0 & 7] & g2 + x0 + x3);
        break;
    default:
        x3 = h0(7, 4);
    }
    g2 = (a[x1 & 7] ^ a[g0 & 7]);
    x2 = 7 * x0 / (1 + ((a[g1 & 7] - 5) & 3));
    if (x3 / (1 + ((x2) & 3)) < 5) {
        i0 = 0;
        do {
            a[x3 & 7] = g2;
            i0++;
        } while (i0 < 0);
        g0 = a[x3 & 7];
    }
    i0 = 0;
    while (i0 < 2) {
        i1 = 0;
        while (i1 < 1) {
            x1 = 7;
            a[a[g0 & 7] & 7] = (8 == a[x2 & 7]);
            if (g1 < 4) {
                bump((0 < g0));
                a[x2 & 7] = a[x3 & 7];
            }
            i1++;
        }
        i0++;
    }
    x2 = h0(6, a[g0 & 7] | g2);
    if (8 + x1 != 4) {
        x1 = (4 & g1 | 5 & 0);
    }
    g0 = 7 | a[g0 & 7] % (1 + ((a[x2 & 7] ^ g1) & 3));
    if (8 == 1)
        x0 = (x1 | x0 - (a[g2 & 7] == g1));
    g1 = (8 / (1 + ((a[x0 & 7]) & 3)) | (g2 < x0));
    x3 = g2;
    i0 = 0;
    do {
        g1 = a[x3 & 7];
        i0++;
    } while (i0 < 1);
    for (i0 = 0; i0 < 3; i0++) {
        x0 = (x1 + x1 - 8);
        print_int((a[x1 & 7] == 1));
    }
    print_int(1);
    x1 = (5 - g2 ^ a[g2 & 7] * x1);
    x3 = ((8 < 7) - (a[x1 & 7] < 1));
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 1) {
            g1 = (x3 * a[x2 & 7] == g1);
            i1++;
        }
        i0++;
    } while (i0 < 1);
    for (i0 = 0; i0 < 2; i0++) {
        if (5 | 9 == 0) continue;
        for (i1 = 0; i1 < 0; i1++) {
            g2 = (x3 - a[x3 & 7] * a[x1 & 7]);
        }
        x3--;
    }
    g1 = 1 * a[g1 & 7] % (1 + ((g1 * a[x0 & 7]) & 3));
    x1 = 0;
    bump(a[x0 & 7] / (1 + ((a[x0 & 7]) & 3)));
    x3 = 6;
    i0 = 0;
    while (i0 < 0) {
        print_int(x0 ^ a[g1 & 7]);
        for (i1 = 0; i1 < 2; i1++) {
            g1 = (x3 | a[g1 & 7] + (a[g0 & 7] < a[g1 & 7]));
        }
        a[g0 & 7] = g2;
        i0++;
    }
    g2 = (7 / (1 + ((7) & 3)) == (a[g2 & 7] == a[x3 & 7]));
    i0 = 0;
    while (i0 < 1) {
        g0 = (g1 / (1 + ((x3) & 3)) ^ a[x2 & 7]);
        g0 = a[g1 & 7];
        i0++;
    }
    x2 = (x3 & a[x0 & 7] - a[x2 & 7]);
    return (x0 + x1) & 255;
}
