struct pt {
    int x;
    int y;
};

int main(void)
{
    struct pt p = {1, 2};
    return p.x;
}
