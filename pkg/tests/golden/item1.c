int last;
void generateMTFValues(void)
{
    last = 0;
}
int main(void)
{
    generateMTFValues();
    return 0;
}
